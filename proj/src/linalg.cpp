#include "lefschetz/linalg.hpp"

namespace lefschetz {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::col(int c) const {
    QMat v(rows, 1);
    for (int r = 0; r < rows; ++r) v.at(r, 0) = at(r, c);
    return v;
}

QMat mul(const QMat& a, const QMat& b) {
    if (a.cols != b.rows) throw InternalError("matrix product shape mismatch");
    QMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& v = a.at(i, k);
            if (is_zero(v)) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

std::vector<Rational> col_vec(const QMat& a, int c) {
    std::vector<Rational> v(static_cast<size_t>(a.rows));
    for (int r = 0; r < a.rows; ++r) v[static_cast<size_t>(r)] = a.at(r, c);
    return v;
}

QMat transpose(const QMat& a) {
    QMat r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

QMat hcat(const QMat& a, const QMat& b) {
    if (a.rows != b.rows) throw InternalError("hcat row mismatch");
    QMat r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

QMat scale(const QMat& a, const Rational& c) {
    QMat r = a;
    for (auto& x : r.d) x *= c;
    return r;
}

QMat add(const QMat& a, const QMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InternalError("matrix sum shape mismatch");
    QMat r = a;
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
    return r;
}

QMat sub(const QMat& a, const QMat& b) { return add(a, scale(b, -1)); }

bool is_zero_mat(const QMat& a) {
    for (const auto& x : a.d)
        if (!is_zero(x)) return false;
    return true;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (!is_zero(m.at(r, col))) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || is_zero(m.at(r, col))) continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw InternalError("inverse of non-square matrix");
    QMat aug = hcat(m, QMat::identity(m.rows));
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows) throw MathError("singular matrix");
    QMat inv(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

Rational det(QMat m) {
    if (m.rows != m.cols) throw InternalError("determinant of non-square matrix");
    Rational result = 1;
    for (int col = 0; col < m.cols; ++col) {
        int pivot = -1;
        for (int r = col; r < m.rows; ++r)
            if (!is_zero(m.at(r, col))) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            result = -result;
        }
        result *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < m.rows; ++r) {
            if (is_zero(m.at(r, col))) continue;
            Rational f = m.at(r, col) * inv;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return result;
}

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    QMat k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k.at(fc, static_cast<int>(f)) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            k.at(pivots[pr], static_cast<int>(f)) = -r.at(static_cast<int>(pr), fc);
    }
    return k;
}

QMat column_space_basis(const QMat& a) {
    QMat r = a;
    auto pivots = rref(r);
    QMat b(a.rows, static_cast<int>(pivots.size()));
    for (size_t j = 0; j < pivots.size(); ++j)
        for (int i = 0; i < a.rows; ++i) b.at(i, static_cast<int>(j)) = a.at(i, pivots[j]);
    return b;
}

QMat intersect(const QMat& a, const QMat& b) {
    if (a.rows != b.rows) throw InternalError("intersect row mismatch");
    if (a.cols == 0 || b.cols == 0) return QMat(a.rows, 0);
    QMat combined = hcat(a, scale(b, -1));
    QMat k = kernel_basis(combined);
    QMat raw(a.rows, k.cols);
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < a.rows; ++i) {
            Rational s = 0;
            for (int c = 0; c < a.cols; ++c) s += a.at(i, c) * k.at(c, j);
            raw.at(i, j) = s;
        }
    return column_space_basis(raw);
}

bool in_span(const QMat& a, const std::vector<Rational>& v) {
    return solve(a, v).has_value();
}

std::optional<std::vector<Rational>> solve(const QMat& a, const std::vector<Rational>& b) {
    LinearSolver s(a);
    return s.solve(b);
}

bool IncrementalSpan::add(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != ambient_) throw InternalError("span vector size mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& lead = v[static_cast<size_t>(pivots_[r])];
        if (is_zero(lead)) continue;
        Rational f = lead;
        for (int c = 0; c < ambient_; ++c) v[static_cast<size_t>(c)] -= f * rows_[r][static_cast<size_t>(c)];
    }
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c)
        if (!is_zero(v[static_cast<size_t>(c)])) { pivot = c; break; }
    if (pivot < 0) return false;
    Rational inv = Rational(1) / v[static_cast<size_t>(pivot)];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool IncrementalSpan::contains(std::vector<Rational> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& lead = v[static_cast<size_t>(pivots_[r])];
        if (is_zero(lead)) continue;
        Rational f = lead;
        for (int c = 0; c < ambient_; ++c) v[static_cast<size_t>(c)] -= f * rows_[r][static_cast<size_t>(c)];
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

std::vector<Rational> QuotientSpace::coords(const std::vector<Rational>& v) const {
    auto x = solver->solve(v);
    if (!x) throw InternalError("vector outside the quotient's numerator space");
    return std::vector<Rational>(x->begin(), x->begin() + dim);
}

QuotientSpace make_quotient(const QMat& numerator, const QMat& denominator) {
    QMat den = column_space_basis(denominator);
    IncrementalSpan span(numerator.rows);
    for (int j = 0; j < den.cols; ++j) {
        std::vector<Rational> v(static_cast<size_t>(den.rows));
        for (int i = 0; i < den.rows; ++i) v[static_cast<size_t>(i)] = den.at(i, j);
        span.add(std::move(v));
    }
    QuotientSpace q;
    q.reps = QMat(numerator.rows, 0);
    for (int j = 0; j < numerator.cols; ++j) {
        std::vector<Rational> v(static_cast<size_t>(numerator.rows));
        for (int i = 0; i < numerator.rows; ++i) v[static_cast<size_t>(i)] = numerator.at(i, j);
        if (span.add(v)) q.reps = hcat(q.reps, numerator.col(j));
    }
    q.dim = q.reps.cols;
    q.solver = std::make_shared<LinearSolver>(hcat(q.reps, den));
    return q;
}

LinearSolver::LinearSolver(const QMat& a) : rows_(a.rows), cols_(a.cols) {
    QMat aug = hcat(a, QMat::identity(a.rows));
    // rref of [A | I] never pivots in the identity block before exhausting A's
    // columns, so the left block is rref(A) and the right block the transform.
    QMat work = aug;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (!is_zero(work.at(r, col))) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < work.cols; ++c) std::swap(work.at(pivot, c), work.at(row, c));
        Rational inv = Rational(1) / work.at(row, col);
        for (int c = 0; c < work.cols; ++c) work.at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || is_zero(work.at(r, col))) continue;
            Rational f = work.at(r, col);
            for (int c = 0; c < work.cols; ++c) work.at(r, c) -= f * work.at(row, c);
        }
        pivots_.push_back(col);
        ++row;
    }
    echelon_ = QMat(rows_, cols_);
    transform_ = QMat(rows_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) echelon_.at(r, c) = work.at(r, c);
        for (int c = 0; c < rows_; ++c) transform_.at(r, c) = work.at(r, cols_ + c);
    }
}

}  // namespace lefschetz
