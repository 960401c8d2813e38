#include "lefschetz/cohomology.hpp"

#include "lefschetz/symplectic.hpp"

namespace lefschetz {

CohomologyContext::CohomologyContext(LieAlgebra g) : g_(std::move(g)) {
    Diagnostics diag = validate(g_);
    if (!diag.jacobi_ok)
        throw MathError("algebra '" + g_.name + "' violates the Jacobi identity: " + diag.detail);
}

const QMat& CohomologyContext::d_matrix(int k) const {
    auto it = d_cache_.find(k);
    if (it != d_cache_.end()) return it->second;
    const auto& src = basis_tuples(g_.dim, k);
    const auto& dst = basis_tuples(g_.dim, k + 1);
    QMat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        Form<Rational> df = differential(g_, monomial_form<Rational>(g_.dim, src[j], 1));
        for (const auto& [idx, c] : df.terms)
            m.at(basis_index(g_.dim, k + 1, idx), static_cast<int>(j)) = c;
    }
    return d_cache_.emplace(k, std::move(m)).first->second;
}

const CohomologyBasis& CohomologyContext::basis(int k) const {
    auto it = basis_cache_.find(k);
    if (it != basis_cache_.end()) return it->second;

    const auto& tuples = basis_tuples(g_.dim, k);
    int ambient = static_cast<int>(tuples.size());

    QMat cocycles = k >= g_.dim ? QMat::identity(ambient) : kernel_basis(d_matrix(k));
    QMat exact = k == 0 ? QMat(ambient, 0) : column_space_basis(d_matrix(k - 1));
    int b = (k < 0 || k > g_.dim) ? 0 : rank(cocycles) - rank(exact);

    // Representatives: closed monomials first, in lexicographic order, then
    // the deterministic kernel basis vectors for anything not reachable by a
    // single e^I.
    CohomologyBasis result;
    result.degree = k;
    QMat chosen(ambient, 0);
    IncrementalSpan spanned(ambient);
    for (int j = 0; j < exact.cols; ++j) spanned.add(col_vec(exact, j));
    auto try_candidate = [&](const std::vector<Rational>& v, const Form<Rational>& f) {
        if (result.dim() == b) return;
        if (!spanned.add(v)) return;
        QMat candidate(ambient, 1);
        for (int i = 0; i < ambient; ++i) candidate.at(i, 0) = v[static_cast<size_t>(i)];
        chosen = hcat(chosen, candidate);
        result.reps.push_back(f);
    };
    if (k >= 0 && k <= g_.dim) {
        for (int j = 0; j < ambient; ++j) {
            Form<Rational> f = monomial_form<Rational>(g_.dim, tuples[static_cast<size_t>(j)], 1);
            if (!differential(g_, f).is_zero()) continue;
            try_candidate(form_coords(f), f);
        }
        for (int j = 0; j < cocycles.cols && result.dim() < b; ++j) {
            std::vector<Rational> v = col_vec(cocycles, j);
            try_candidate(v, form_from_coords(g_.dim, k, v));
        }
    }
    if (result.dim() != b) throw InternalError("cohomology representative search incomplete");

    result.combined = hcat(chosen, exact);
    result.solver = std::make_shared<LinearSolver>(result.combined);
    return basis_cache_.emplace(k, std::move(result)).first->second;
}

std::vector<int> CohomologyContext::betti_all() const {
    std::vector<int> b;
    for (int k = 0; k <= g_.dim; ++k) b.push_back(betti(k));
    return b;
}

int column_rank(const std::vector<std::vector<Rational>>& cols, int rows) {
    QMat m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    return rank(std::move(m));
}

HLCReport hlc_check(const CohomologyContext& ctx, const SymplecticStructure& omega) {
    int n = ctx.algebra().dim / 2;
    HLCReport report;
    report.hlc = true;
    report.all_isomorphisms = true;
    for (int k = 1; k <= n; ++k) {
        auto cols = ctx.lefschetz_matrix(omega.omega, k);
        LefschetzDegreeReport deg;
        deg.k = k;
        deg.rank = column_rank(cols, ctx.betti(n + k));
        deg.surjective = deg.rank == ctx.betti(n + k);
        deg.isomorphism = deg.surjective && ctx.betti(n - k) == ctx.betti(n + k);
        deg.betti_symmetric = ctx.betti(n - k) == ctx.betti(n + k);
        report.hlc = report.hlc && deg.surjective;
        report.all_isomorphisms = report.all_isomorphisms && deg.isomorphism;
        report.degrees.push_back(deg);
    }
    return report;
}

}  // namespace lefschetz
