#ifndef LEFSCHETZ_LINALG_HPP
#define LEFSCHETZ_LINALG_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// Dense matrix over the rationals. All elimination is exact; pivoting is
// first-nonzero, so every result is deterministic.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rational> d;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c) {}

    static QMat identity(int n);

    Rational& at(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }

    QMat col(int c) const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && d == o.d; }
};

QMat mul(const QMat& a, const QMat& b);
QMat transpose(const QMat& a);
std::vector<Rational> col_vec(const QMat& a, int c);
QMat hcat(const QMat& a, const QMat& b);
QMat scale(const QMat& a, const Rational& c);
QMat add(const QMat& a, const QMat& b);
QMat sub(const QMat& a, const QMat& b);
bool is_zero_mat(const QMat& a);

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(QMat& m);

int rank(QMat m);
QMat inverse(const QMat& m);  // throws MathError when singular
Rational det(QMat m);

// Columns spanning ker(m), deterministic (one per free column, ascending).
QMat kernel_basis(const QMat& m);

// The subset of a's columns that forms a basis of its column space.
QMat column_space_basis(const QMat& a);

// Basis of (col A) ∩ (col B).
QMat intersect(const QMat& a, const QMat& b);

bool in_span(const QMat& a, const std::vector<Rational>& v);

std::optional<std::vector<Rational>> solve(const QMat& a, const std::vector<Rational>& b);

// One-time elimination of A, reusable against right-hand sides over any
// Q-algebra (rationals or polynomials): records the row transform T with
// T*A in reduced echelon form.
class LinearSolver {
public:
    explicit LinearSolver(const QMat& a);

    int rank_value() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }

    // Solves A x = b exactly; absent when inconsistent. Free variables are
    // set to zero, so the solution is deterministic.
    template <typename R>
    std::optional<std::vector<R>> solve(const std::vector<R>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw InternalError("solver rhs size mismatch");
        std::vector<R> y(static_cast<size_t>(rows_));
        for (int r = 0; r < rows_; ++r) {
            R acc{};
            for (int c = 0; c < rows_; ++c) {
                const Rational& t = transform_.at(r, c);
                if (!lefschetz::is_zero(t)) acc = acc + b[static_cast<size_t>(c)] * t;
            }
            y[static_cast<size_t>(r)] = std::move(acc);
        }
        for (int r = rank_value(); r < rows_; ++r)
            if (!lefschetz::is_zero(y[static_cast<size_t>(r)])) return std::nullopt;
        std::vector<R> x(static_cast<size_t>(cols_));
        for (int r = 0; r < rank_value(); ++r)
            x[static_cast<size_t>(pivots_[static_cast<size_t>(r)])] = y[static_cast<size_t>(r)];
        return x;
    }

private:
    int rows_ = 0, cols_ = 0;
    QMat echelon_;
    QMat transform_;
    std::vector<int> pivots_;
};

// Incrementally maintained row echelon span, for greedy basis extension.
class IncrementalSpan {
public:
    explicit IncrementalSpan(int ambient) : ambient_(ambient) {}

    // Adds v to the span; returns false when v was already in it.
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    int rank_value() const { return static_cast<int>(rows_.size()); }

private:
    int ambient_;
    std::vector<std::vector<Rational>> rows_;  // echelon rows, pivot scaled to 1
    std::vector<int> pivots_;
};

// Coordinates in a quotient Z/B of column spans (B ⊆ Z): representatives are
// chosen greedily from Z's columns extending a basis of B.
struct QuotientSpace {
    int dim = 0;
    QMat reps;                                   // ambient x dim
    std::shared_ptr<const LinearSolver> solver;  // for [reps | basis of B]

    // v must lie in Z; returns its rep coordinates modulo B
    std::vector<Rational> coords(const std::vector<Rational>& v) const;
};

QuotientSpace make_quotient(const QMat& numerator, const QMat& denominator);

// Fraction-free determinant over an integral domain; exact_div must perform
// exact division and is only called on divisions the Bareiss recurrence
// guarantees to be exact.
template <typename R>
R bareiss_det(std::vector<std::vector<R>> m, const std::function<R(const R&, const R&)>& exact_div,
              const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    R prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (lefschetz::is_zero(m[k][k])) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!lefschetz::is_zero(m[r][k])) { swap_row = r; break; }
            if (swap_row < 0) {
                R zero = m[k][k];
                return zero;  // entire column zero: determinant vanishes
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    R result = m[n - 1][n - 1];
    if (sign < 0) result = -result;
    return result;
}

}  // namespace lefschetz

#endif
