#ifndef LEFSCHETZ_LIEALGEBRA_HPP
#define LEFSCHETZ_LIEALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// One summand of a Maurer-Cartan structure equation: de^k contains c·e^i∧e^j.
struct StructureTerm {
    int i = 0, j = 0;
    Rational c;
};

// A Lie algebra presented through the differential of its dual coframe.
struct LieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<std::vector<StructureTerm>> d;  // d[k-1] describes de^k
    bool claimed_completely_solvable = false;
    bool claimed_lattice = false;

    const std::vector<StructureTerm>& d_of(int k) const { return d[static_cast<size_t>(k - 1)]; }
};

struct Diagnostics {
    bool jacobi_ok = false;
    bool unimodular = false;
    std::string detail;
};

// Structural checks on the fields (index ranges, i<j, duplicates).
void check_well_formed(const LieAlgebra& g);

// d∘d = 0 on generators (Jacobi) and the trace condition for unimodularity.
Diagnostics validate(const LieAlgebra& g);

// de^k as a 2-form.
template <typename R>
Form<R> generator_differential(const LieAlgebra& g, int k, const R& one) {
    Form<R> f(g.dim, 2);
    for (const auto& t : g.d_of(k)) f.add_term({t.i, t.j}, one * t.c);
    return f;
}

// Chevalley-Eilenberg differential, extended as an anti-derivation. Scalar
// parameters of a polynomial ring are constants under d.
template <typename R>
Form<R> differential(const LieAlgebra& g, const Form<R>& a) {
    if (a.dim != g.dim) throw UsageError("form does not live on this algebra");
    Form<R> result(g.dim, a.degree + 1);
    if (a.degree >= g.dim) return result;
    for (const auto& [idx, c] : a.terms) {
        for (size_t t = 0; t < idx.size(); ++t) {
            IndexTuple rest;
            for (size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            int leibniz = (t % 2 == 0) ? 1 : -1;
            for (const auto& st : g.d_of(idx[t])) {
                auto merged = wedge_indices({st.i, st.j}, rest);
                if (!merged) continue;
                R v = c * st.c;
                if (leibniz * merged->second < 0) v = -v;
                result.add_term(merged->first, v);
            }
        }
    }
    return result;
}

// ---- builtin catalog -------------------------------------------------------

struct CatalogEntry {
    LieAlgebra algebra;
    std::optional<Form<Rational>> omega;  // a preferred invariant symplectic form
    std::optional<QMat> j_coframe;        // coframe action of a compatible J
    // preferred parametric family (name, closed 2-form); empty = use the H^2 basis
    std::vector<std::pair<std::string, Form<Rational>>> family_basis;
    std::string description;
};

std::vector<std::string> catalog_names();
const CatalogEntry& catalog_entry(const std::string& name);
LieAlgebra catalog_get(const std::string& name);

// ---- JSON algebra files ----------------------------------------------------

LieAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const LieAlgebra& g);
LieAlgebra load_algebra(const std::string& path);
void save_algebra(const LieAlgebra& g, const std::string& path);

}  // namespace lefschetz

#endif
