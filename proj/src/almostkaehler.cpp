#include "lefschetz/almostkaehler.hpp"

#include <functional>

#include "lefschetz/errors.hpp"
#include "lefschetz/exterior.hpp"

namespace lefschetz {

AlmostComplexStructure make_almost_complex(QMat coframe) {
    if (coframe.rows != coframe.cols) throw UsageError("J must be square");
    QMat square = mul(coframe, coframe);
    QMat minus_id = scale(QMat::identity(coframe.rows), -1);
    if (!(square == minus_id)) throw MathError("J^2 != -id");
    return AlmostComplexStructure{std::move(coframe)};
}

Form<Rational> j_form_action(const AlmostComplexStructure& j, const Form<Rational>& a) {
    int dim = j.coframe.rows;
    if (a.dim != dim) throw UsageError("form dimension does not match J");
    Form<Rational> result(dim, a.degree);
    for (const auto& [idx, c] : a.terms) {
        Form<Rational> term(dim, 0);
        term.add_term({}, c);
        for (int i : idx) {
            Form<Rational> ji(dim, 1);
            for (int r = 1; r <= dim; ++r) {
                const Rational& entry = j.coframe.at(r - 1, i - 1);
                if (!is_zero(entry)) ji.add_term({r}, entry);
            }
            term = wedge(term, ji);
        }
        result = result + term;
    }
    return result;
}

std::optional<CompatibleTriple> compatibility_check(const AlmostComplexStructure& j,
                                                    const Form<Rational>& omega) {
    int dim = j.coframe.rows;
    if (omega.degree != 2 || omega.dim != dim)
        throw UsageError("compatibility check needs a 2-form of matching dimension");
    QMat omega_mat = two_form_matrix(omega);
    // the frame action is the transpose of the coframe action
    QMat j_vec = transpose(j.coframe);
    QMat invariance = mul(transpose(j_vec), mul(omega_mat, j_vec));
    if (!(invariance == omega_mat)) return std::nullopt;
    QMat metric = mul(omega_mat, j_vec);  // g(u, v) = omega(u, Jv)
    if (!(metric == transpose(metric))) return std::nullopt;
    // Sylvester: all leading principal minors positive
    for (int k = 1; k <= dim; ++k) {
        QMat minor(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor.at(r, c) = metric.at(r, c);
        if (det(std::move(minor)) <= 0) return std::nullopt;
    }
    return CompatibleTriple{j, omega, metric};
}

namespace {

Rational rational_sqrt_or_throw(const Rational& r) {
    using boost::multiprecision::sqrt;
    Int num = numerator(r), den = denominator(r);
    if (num < 0) throw MathError("negative metric determinant");
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den)
        throw MathError("unsupported metric: det(g) is not the square of a rational");
    return Rational(sn, sd);
}

}  // namespace

HodgeOps::HodgeOps(const CohomologyContext& ctx, CompatibleTriple triple)
    : ctx_(ctx), t_(std::move(triple)), dim_(t_.metric.rows) {
    if (ctx_.algebra().dim != dim_) throw UsageError("context and triple dimension mismatch");
    cometric_ = inverse(t_.metric);
    vol_scale_ = rational_sqrt_or_throw(det(t_.metric));
}

Rational HodgeOps::inner(const Form<Rational>& a, const Form<Rational>& b) const {
    return omega_inv_pairing(cometric_, a, b);
}

Form<Rational> HodgeOps::hodge_star(const Form<Rational>& a) const {
    int k = a.degree;
    Form<Rational> result(dim_, dim_ - k);
    for (const auto& alpha : basis_tuples(dim_, k)) {
        Rational p = inner(monomial_form<Rational>(dim_, alpha, 1), a);
        if (is_zero(p)) continue;
        IndexTuple comp;
        std::vector<bool> used(static_cast<size_t>(dim_) + 1, false);
        for (int i : alpha) used[static_cast<size_t>(i)] = true;
        for (int i = 1; i <= dim_; ++i)
            if (!used[static_cast<size_t>(i)]) comp.push_back(i);
        auto merged = wedge_indices(alpha, comp);
        if (!merged) throw InternalError("complement overlap");
        Rational c = p * vol_scale_;
        if (merged->second < 0) c = -c;
        result.add_term(comp, c);
    }
    return result;
}

const QMat& HodgeOps::star_matrix(int k) const {
    auto it = star_cache_.find(k);
    if (it != star_cache_.end()) return it->second;
    const auto& src = basis_tuples(dim_, k);
    const auto& dst = basis_tuples(dim_, dim_ - k);
    QMat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        Form<Rational> image = hodge_star(monomial_form<Rational>(dim_, src[j], 1));
        for (const auto& [idx, c] : image.terms)
            m.at(basis_index(dim_, dim_ - k, idx), static_cast<int>(j)) = c;
    }
    return star_cache_.emplace(k, std::move(m)).first->second;
}

QMat HodgeOps::delta_matrix(int k) const {
    // delta = -*_g d *_g on k-forms in even total dimension
    QMat m = mul(star_matrix(dim_ - k + 1), mul(ctx_.d_matrix(dim_ - k), star_matrix(k)));
    return scale(m, -1);
}

QMat HodgeOps::laplacian_matrix(int k) const {
    QMat d_delta = mul(ctx_.d_matrix(k - 1), delta_matrix(k));
    QMat delta_d = mul(delta_matrix(k + 1), ctx_.d_matrix(k));
    return add(d_delta, delta_d);
}

Form<Rational> HodgeOps::laplacian(const Form<Rational>& a) const {
    QMat m = laplacian_matrix(a.degree);
    auto v = form_coords(a);
    std::vector<Rational> out(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Rational acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return form_from_coords(dim_, a.degree, out);
}

namespace {

// matrix of the multiplicative J action on Λ^2
QMat j_two_form_matrix(const AlmostComplexStructure& j, int dim) {
    const auto& basis = basis_tuples(dim, 2);
    QMat m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
        Form<Rational> image = j_form_action(j, monomial_form<Rational>(dim, basis[c], 1));
        for (const auto& [idx, v] : image.terms)
            m.at(basis_index(dim, 2, idx), static_cast<int>(c)) = v;
    }
    return m;
}

// columns spanning the subspace of closed forms inside the column span of s
QMat closed_subspace(const CohomologyContext& ctx, int k, const QMat& s) {
    return intersect(s, kernel_basis(ctx.d_matrix(k)));
}

// image of a subspace of cocycles in H^k, as a matrix of class coordinates
QMat project_to_cohomology(const CohomologyContext& ctx, int k, const QMat& cocycles) {
    QMat out(ctx.betti(k), cocycles.cols);
    for (int j = 0; j < cocycles.cols; ++j) {
        auto coords =
            ctx.class_coordinates(form_from_coords(ctx.algebra().dim, k, col_vec(cocycles, j)));
        for (int i = 0; i < out.rows; ++i) out.at(i, j) = coords[static_cast<size_t>(i)];
    }
    return out;
}

// the invariant primitive 2-forms: kernel of wedging with omega^{n-1}
QMat primitive_two_forms(const CohomologyContext& ctx, const Form<Rational>& omega) {
    int dim = ctx.algebra().dim;
    int n = dim / 2;
    Form<Rational> w = wedge_pow(omega, n - 1);
    const auto& basis = basis_tuples(dim, 2);
    const auto& top = basis_tuples(dim, 2 * n);
    QMat m(static_cast<int>(top.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        Form<Rational> image = wedge(monomial_form<Rational>(dim, basis[j], 1), w);
        for (const auto& [idx, c] : image.terms)
            m.at(basis_index(dim, 2 * n, idx), static_cast<int>(j)) = c;
    }
    return kernel_basis(m);
}

}  // namespace

namespace {

// Representatives of the image of a cocycle subspace inside H^2: greedily
// keep the columns whose classes are new.
std::vector<Form<Rational>> class_representatives(const CohomologyContext& ctx, int k,
                                                  const QMat& cocycles, const QMat& projected) {
    IncrementalSpan span(projected.rows);
    std::vector<Form<Rational>> reps;
    for (int j = 0; j < cocycles.cols; ++j)
        if (span.add(col_vec(projected, j)))
            reps.push_back(form_from_coords(ctx.algebra().dim, k, col_vec(cocycles, j)));
    return reps;
}

}  // namespace

JInvariantReport j_invariant_cohomology(const CohomologyContext& ctx,
                                        const AlmostComplexStructure& j,
                                        const Form<Rational>&) {
    int dim = ctx.algebra().dim;
    QMat action = j_two_form_matrix(j, dim);
    int amb = action.rows;
    QMat plus = kernel_basis(sub(action, QMat::identity(amb)));
    QMat minus = kernel_basis(add(action, QMat::identity(amb)));
    QMat z_plus = closed_subspace(ctx, 2, plus);
    QMat z_minus = closed_subspace(ctx, 2, minus);
    QMat p_plus = project_to_cohomology(ctx, 2, z_plus);
    QMat p_minus = project_to_cohomology(ctx, 2, z_minus);

    JInvariantReport report;
    report.plus_basis = class_representatives(ctx, 2, z_plus, p_plus);
    report.minus_basis = class_representatives(ctx, 2, z_minus, p_minus);
    report.h_plus = static_cast<int>(report.plus_basis.size());
    report.h_minus = static_cast<int>(report.minus_basis.size());
    int sum_rank = rank(hcat(p_plus, p_minus));
    bool direct = sum_rank == report.h_plus + report.h_minus;
    report.pure_and_full = direct && sum_rank == ctx.betti(2);
    return report;
}

PrimitiveJReport primitive_j_cohomology(const CohomologyContext& ctx,
                                        const AlmostComplexStructure& j,
                                        const Form<Rational>& omega) {
    int dim = ctx.algebra().dim;
    QMat action = j_two_form_matrix(j, dim);
    QMat plus = kernel_basis(sub(action, QMat::identity(action.rows)));
    QMat primitive = primitive_two_forms(ctx, omega);
    QMat candidates = closed_subspace(ctx, 2, intersect(plus, primitive));
    QMat projected = project_to_cohomology(ctx, 2, candidates);
    PrimitiveJReport report;
    report.basis = class_representatives(ctx, 2, candidates, projected);
    report.dim = static_cast<int>(report.basis.size());
    return report;
}

LejmiReport lejmi_kernel(const CohomologyContext& ctx, const CompatibleTriple& triple) {
    int dim = ctx.algebra().dim;
    int n = dim / 2;
    HodgeOps hodge(ctx, triple);
    QMat primitive = primitive_two_forms(ctx, triple.omega);
    // P_J as a matrix on the primitive subspace, expressed in Λ^2 coordinates
    const auto& basis2 = basis_tuples(dim, 2);
    QMat pj(static_cast<int>(basis2.size()), primitive.cols);
    for (int c = 0; c < primitive.cols; ++c) {
        Form<Rational> psi = form_from_coords(dim, 2, col_vec(primitive, c));
        Form<Rational> lap = hodge.laplacian(psi);
        Rational trace_part = hodge.inner(lap, triple.omega) / n;
        Form<Rational> value = lap - scale(triple.omega, trace_part);
        for (const auto& [idx, v] : value.terms)
            pj.at(basis_index(dim, 2, idx), c) = v;
    }
    QMat kernel_coords = kernel_basis(pj);  // coordinates in the primitive basis
    LejmiReport report;
    report.kernel_dim = kernel_coords.cols;
    for (int j = 0; j < kernel_coords.cols; ++j) {
        std::vector<Rational> v(static_cast<size_t>(primitive.rows), 0);
        for (int c = 0; c < primitive.cols; ++c) {
            const Rational& w = kernel_coords.at(c, j);
            if (is_zero(w)) continue;
            for (int i = 0; i < primitive.rows; ++i) v[static_cast<size_t>(i)] += primitive.at(i, c) * w;
        }
        report.basis.push_back(form_from_coords(dim, 2, v));
    }
    return report;
}

}  // namespace lefschetz
