#ifndef LEFSCHETZ_ALMOSTKAEHLER_HPP
#define LEFSCHETZ_ALMOSTKAEHLER_HPP

#include <map>
#include <optional>
#include <vector>

#include "lefschetz/cohomology.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/linalg.hpp"

namespace lefschetz {

// Almost complex structure given by its action on the coframe: column i of
// the matrix is J e^i.
struct AlmostComplexStructure {
    QMat coframe;
};

AlmostComplexStructure make_almost_complex(QMat coframe);  // enforces J^2 = -id

// J acting multiplicatively on k-forms; on 2-forms this is the involution
// alpha(J·, J·).
Form<Rational> j_form_action(const AlmostComplexStructure& j, const Form<Rational>& a);

struct CompatibleTriple {
    AlmostComplexStructure j;
    Form<Rational> omega;
    QMat metric;  // Gram matrix of g(u, v) = omega(u, Jv) on the frame
};

// Present when omega is J-invariant and omega(w, Jw) > 0; the positivity test
// is Sylvester's criterion, exact.
std::optional<CompatibleTriple> compatibility_check(const AlmostComplexStructure& j,
                                                    const Form<Rational>& omega);

// Invariant Hodge theory of a compatible triple. Requires det(g) to be the
// square of a rational (automatic for the catalog's orthonormal coframes);
// anything else raises MathError as an unsupported metric.
class HodgeOps {
public:
    HodgeOps(const CohomologyContext& ctx, CompatibleTriple triple);

    const CompatibleTriple& triple() const { return t_; }

    Form<Rational> hodge_star(const Form<Rational>& a) const;
    const QMat& star_matrix(int k) const;
    QMat delta_matrix(int k) const;      // codifferential Λ^k -> Λ^{k-1}
    QMat laplacian_matrix(int k) const;  // d delta + delta d
    Form<Rational> laplacian(const Form<Rational>& a) const;

    // metric pairing on k-forms (Gram-determinant extension of g^{-1})
    Rational inner(const Form<Rational>& a, const Form<Rational>& b) const;

private:
    const CohomologyContext& ctx_;
    CompatibleTriple t_;
    int dim_ = 0;
    QMat cometric_;        // inverse Gram matrix: the pairing on the coframe
    Rational vol_scale_;   // sqrt(det g)
    mutable std::map<int, QMat> star_cache_;
};

struct JInvariantReport {
    int h_plus = 0;
    int h_minus = 0;
    bool pure_and_full = false;
    std::vector<Form<Rational>> plus_basis;   // closed forms spanning H^+_J
    std::vector<Form<Rational>> minus_basis;  // closed forms spanning H^-_J
};

JInvariantReport j_invariant_cohomology(const CohomologyContext& ctx,
                                        const AlmostComplexStructure& j,
                                        const Form<Rational>& omega);

struct PrimitiveJReport {
    int dim = 0;
    std::vector<Form<Rational>> basis;
};

// classes of closed, J-invariant, primitive (omega^{n-1} ∧ alpha = 0) 2-forms
PrimitiveJReport primitive_j_cohomology(const CohomologyContext& ctx,
                                        const AlmostComplexStructure& j,
                                        const Form<Rational>& omega);

struct LejmiReport {
    int kernel_dim = 0;
    std::vector<Form<Rational>> basis;
};

// kernel of P_J(psi) = Delta psi - (1/n) g(Delta psi, omega) omega on the
// invariant primitive 2-forms
LejmiReport lejmi_kernel(const CohomologyContext& ctx, const CompatibleTriple& triple);

}  // namespace lefschetz

#endif
