#ifndef LEFSCHETZ_COHOMOLOGY_HPP
#define LEFSCHETZ_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <vector>

#include "lefschetz/exterior.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/liealgebra.hpp"
#include "lefschetz/linalg.hpp"

namespace lefschetz {

// Cocycle representatives of H^k plus the solved system expressing any closed
// form as (combination of representatives) + (exact form).
struct CohomologyBasis {
    int degree = 0;
    std::vector<Form<Rational>> reps;
    QMat combined;  // columns: representatives, then a basis of the exact forms
    std::shared_ptr<const LinearSolver> solver;

    int dim() const { return static_cast<int>(reps.size()); }
};

// Per-algebra cache of differentials and bases; all members are computed
// lazily and never change afterwards.
class CohomologyContext {
public:
    explicit CohomologyContext(LieAlgebra g);

    const LieAlgebra& algebra() const { return g_; }

    // matrix of d : Λ^k -> Λ^{k+1} on the monomial bases
    const QMat& d_matrix(int k) const;
    const CohomologyBasis& basis(int k) const;
    int betti(int k) const { return basis(k).dim(); }
    std::vector<int> betti_all() const;

    // coordinates of a closed form in the basis of H^k; the form must be
    // closed (checked; reports d(a) otherwise)
    template <typename R>
    std::vector<R> class_coordinates(const Form<R>& a) const {
        Form<R> da = differential(g_, a);
        if (!da.is_zero())
            throw MathError("form is not closed: d(a) = " + form_str(da));
        const CohomologyBasis& b = basis(a.degree);
        auto x = b.solver->solve(form_coords(a));
        if (!x) throw InternalError("closed form outside cocycle space");
        return std::vector<R>(x->begin(), x->begin() + b.dim());
    }

    // matrix over R of [α] -> [α ∧ ω^k] : H^{n-k} -> H^{n+k}; columns indexed
    // by the H^{n-k} representatives
    template <typename R>
    std::vector<std::vector<R>> lefschetz_matrix(const Form<R>& omega_rep, int k) const {
        if (g_.dim % 2 != 0) throw UsageError("Lefschetz maps need an even-dimensional algebra");
        if (omega_rep.degree != 2) throw UsageError("omega must be a 2-form");
        {
            Form<R> dw = differential(g_, omega_rep);
            if (!dw.is_zero())
                throw MathError("omega is not closed: d(omega) = " + form_str(dw));
        }
        int n = g_.dim / 2;
        if (k < 0 || k > n) throw UsageError("Lefschetz power out of range");
        Form<R> wk = wedge_pow(omega_rep, k);
        const CohomologyBasis& src = basis(n - k);
        std::vector<std::vector<R>> cols;
        for (const auto& rep : src.reps) {
            Form<R> lifted(rep.dim, rep.degree);
            for (const auto& [idx, c] : rep.terms) lifted.terms[idx] = ring_one(omega_rep) * c;
            cols.push_back(class_coordinates(wedge(lifted, wk)));
        }
        return cols;
    }

private:
    LieAlgebra g_;
    mutable std::map<int, QMat> d_cache_;
    mutable std::map<int, CohomologyBasis> basis_cache_;
};

struct LefschetzDegreeReport {
    int k = 0;
    int rank = 0;
    bool surjective = false;
    bool isomorphism = false;
    bool betti_symmetric = false;  // b_{n-k} == b_{n+k}
};

struct HLCReport {
    std::vector<LefschetzDegreeReport> degrees;  // k = 1..n
    bool hlc = false;                            // all maps surjective
    bool all_isomorphisms = false;
};

struct SymplecticStructure;

HLCReport hlc_check(const CohomologyContext& ctx, const SymplecticStructure& omega);

// rank of a column-major rational matrix given as vectors
int column_rank(const std::vector<std::vector<Rational>>& cols, int rows);

}  // namespace lefschetz

#endif
