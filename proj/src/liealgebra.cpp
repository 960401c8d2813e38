#include "lefschetz/liealgebra.hpp"

#include <set>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

void check_well_formed(const LieAlgebra& g) {
    if (g.dim < 1 || g.dim > 16) throw UsageError("algebra dimension must be in 1..16");
    if (static_cast<int>(g.d.size()) != g.dim)
        throw UsageError("differential table must have one entry per generator");
    for (int k = 1; k <= g.dim; ++k) {
        std::set<std::pair<int, int>> seen;
        for (const auto& t : g.d_of(k)) {
            if (t.i < 1 || t.j > g.dim || t.i >= t.j)
                throw UsageError("de^" + std::to_string(k) + " has an invalid index pair (" +
                                 std::to_string(t.i) + "," + std::to_string(t.j) + ")");
            if (!seen.insert({t.i, t.j}).second)
                throw UsageError("de^" + std::to_string(k) + " repeats the pair (" +
                                 std::to_string(t.i) + "," + std::to_string(t.j) + ")");
        }
    }
}

Diagnostics validate(const LieAlgebra& g) {
    check_well_formed(g);
    Diagnostics diag;
    diag.jacobi_ok = true;
    std::ostringstream detail;
    for (int k = 1; k <= g.dim; ++k) {
        Form<Rational> dk = generator_differential<Rational>(g, k, 1);
        Form<Rational> ddk = differential(g, dk);
        if (!ddk.is_zero()) {
            diag.jacobi_ok = false;
            detail << "d(de^" << k << ") = " << form_str(ddk) << " != 0; ";
        }
    }
    diag.unimodular = true;
    // trace(ad_m) = sum over k of the coefficient of e^k∧e^m in de^k
    for (int m = 1; m <= g.dim; ++m) {
        Rational trace = 0;
        for (int k = 1; k <= g.dim; ++k)
            for (const auto& t : g.d_of(k)) {
                if (t.i == k && t.j == m) trace += t.c;       // e^{km}, k<m
                else if (t.i == m && t.j == k) trace -= t.c;  // e^{mk} = -e^{km}
            }
        if (!is_zero(trace)) {
            diag.unimodular = false;
            detail << "trace(ad_e" << m << ") = " << rational_str(trace) << "; ";
        }
    }
    diag.detail = detail.str();
    return diag;
}

}  // namespace lefschetz
