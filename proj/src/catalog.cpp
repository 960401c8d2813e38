#include <map>

#include "lefschetz/errors.hpp"
#include "lefschetz/liealgebra.hpp"

namespace lefschetz {

namespace {

LieAlgebra make_algebra(std::string name, int dim,
                        std::vector<std::pair<int, std::vector<StructureTerm>>> diffs,
                        bool completely_solvable) {
    LieAlgebra g;
    g.name = std::move(name);
    g.dim = dim;
    g.d.assign(static_cast<size_t>(dim), {});
    for (auto& [k, terms] : diffs) g.d[static_cast<size_t>(k - 1)] = std::move(terms);
    g.claimed_completely_solvable = completely_solvable;
    g.claimed_lattice = true;
    check_well_formed(g);
    return g;
}

Form<Rational> two_form(int dim, std::vector<std::pair<IndexTuple, Rational>> terms) {
    Form<Rational> f(dim, 2);
    for (auto& [idx, c] : terms) f.add_term(idx, c);
    return f;
}

// Coframe action with J e^{2k-1} = -e^{2k}, J e^{2k} = e^{2k-1} in the listed
// pairing order; pairs are (column index -> signed target index).
QMat j_from_pairs(int dim, const std::vector<std::pair<int, int>>& images) {
    QMat j(dim, dim);
    for (auto [src, dst] : images) {
        int target = dst > 0 ? dst : -dst;
        j.at(target - 1, src - 1) = dst > 0 ? 1 : -1;
    }
    return j;
}

QMat standard_j(int dim) {
    std::vector<std::pair<int, int>> images;
    for (int k = 1; k <= dim / 2; ++k) {
        images.push_back({2 * k - 1, -2 * k});
        images.push_back({2 * k, 2 * k - 1});
    }
    return j_from_pairs(dim, images);
}

Form<Rational> standard_omega(int dim) {
    std::vector<std::pair<IndexTuple, Rational>> terms;
    for (int k = 1; k <= dim / 2; ++k) terms.push_back({{2 * k - 1, 2 * k}, 1});
    return two_form(dim, terms);
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;

    {
        CatalogEntry e;
        e.algebra = make_algebra("r4", 4, {}, true);
        e.omega = standard_omega(4);
        e.j_coframe = standard_j(4);
        e.description = "abelian R^4 (4-torus)";
        cat["r4"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra("r6", 6, {}, true);
        e.omega = standard_omega(6);
        e.j_coframe = standard_j(6);
        e.description = "abelian R^6 (6-torus)";
        cat["r6"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra("nil3xr", 4, {{3, {{1, 2, -1}}}}, true);
        e.omega = two_form(4, {{{1, 4}, 1}, {{2, 3}, 1}});
        e.description = "nil^3 x R (Kodaira-Thurston)";
        cat["nil3xr"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra("nil4", 4, {{1, {{2, 4, 1}}}, {2, {{3, 4, 1}}}}, true);
        e.omega = two_form(4, {{{1, 4}, 1}, {{2, 3}, 1}});
        e.description = "nil^4 (filiform nilpotent)";
        cat["nil4"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra("sol3xr", 4, {{2, {{1, 2, 1}}}, {3, {{1, 3, -1}}}}, true);
        e.omega = two_form(4, {{{1, 4}, 1}, {{2, 3}, 1}});
        e.description = "sol^3 x R";
        cat["sol3xr"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra("r30xr", 4, {{2, {{1, 3, -1}}}, {3, {{1, 2, 1}}}}, false);
        e.omega = two_form(4, {{{1, 4}, 1}, {{2, 3}, 1}});
        e.description = "r'_{3,0} x R (hyperelliptic surface; invariant cohomology)";
        cat["r30xr"] = e;
    }
    {
        CatalogEntry e;
        e.algebra = make_algebra(
            "nakamura6", 6,
            {{3, {{1, 3, 1}}}, {4, {{1, 4, -1}}}, {5, {{1, 5, 1}}}, {6, {{1, 6, -1}}}}, true);
        e.omega = standard_omega(6);
        e.j_coframe = standard_j(6);
        e.family_basis = {{"c1", two_form(6, {{{1, 2}, 1}})},
                          {"c2", two_form(6, {{{3, 4}, 1}})},
                          {"c3", two_form(6, {{{5, 6}, 1}})},
                          {"c4", two_form(6, {{{3, 6}, 1}})},
                          {"c5", two_form(6, {{{4, 5}, 1}})}};
        e.description = "completely solvable Nakamura manifold N^6";
        cat["nakamura6"] = e;
    }
    {
        // Generators (e^1..e^6) = (alpha_1, beta_1, alpha_2, beta_2, gamma, eta)
        // with the c = 1 normalization. The weights on beta_i carry the sign
        // opposite to alpha_i: that choice is forced by the closedness of
        // alpha_i∧beta_j, hence by the published second cohomology.
        CatalogEntry e;
        e.algebra = make_algebra(
            "fms_m6", 6,
            {{1, {{1, 5, -1}}}, {2, {{2, 5, 1}}}, {3, {{3, 5, -1}}}, {4, {{4, 5, 1}}}}, true);
        e.omega = standard_omega(6);
        e.j_coframe = standard_j(6);
        // omega, xi_1, xi_2, xi_3, theta in the real coframe
        e.family_basis = {{"c", standard_omega(6)},
                          {"c1", two_form(6, {{{1, 4}, 1}, {{2, 3}, -1}})},
                          {"c2", two_form(6, {{{1, 2}, 1}, {{5, 6}, -1}})},
                          {"c3", two_form(6, {{{3, 4}, 1}, {{5, 6}, -1}})},
                          {"a", two_form(6, {{{1, 4}, 1}, {{2, 3}, 1}})}};
        e.description = "M^6(c): cohomologically Kaehler solvmanifold with no Kaehler metric";
        cat["fms_m6"] = e;
    }
    return cat;
}

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : catalog()) names.push_back(name);
    return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) {
        std::string valid;
        for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
        throw UsageError("unknown catalog algebra '" + name + "' (valid: " + valid + ")");
    }
    return it->second;
}

LieAlgebra catalog_get(const std::string& name) { return catalog_entry(name).algebra; }

}  // namespace lefschetz
