#include "lefschetz/parametric.hpp"

#include <random>

#include "lefschetz/errors.hpp"

namespace lefschetz {

ParametricFamily generic_family(
    const CohomologyContext& ctx,
    const std::optional<std::vector<std::pair<std::string, Form<Rational>>>>& basis_override) {
    const LieAlgebra& g = ctx.algebra();
    ParametricFamily family;
    std::vector<Form<Rational>> basis;
    if (basis_override) {
        for (const auto& [name, form] : *basis_override) {
            if (form.degree != 2 || form.dim != g.dim)
                throw UsageError("family basis forms must be 2-forms on the algebra");
            Form<Rational> df = differential(g, form);
            if (!df.is_zero())
                throw MathError("family basis form '" + name +
                                "' is not closed: d = " + form_str(df));
            family.params.push_back(name);
            basis.push_back(form);
        }
        if (family.params.empty()) throw UsageError("empty family basis");
    } else {
        if (ctx.betti(2) < 1) throw MathError("algebra has no second cohomology classes");
        const auto& reps = ctx.basis(2).reps;
        for (size_t i = 0; i < reps.size(); ++i) {
            family.params.push_back("c" + std::to_string(i + 1));
            basis.push_back(reps[i]);
        }
    }
    family.omega = Form<Poly>(g.dim, 2);
    for (size_t i = 0; i < basis.size(); ++i) {
        Poly p = Poly::variable(family.params, family.params[i]);
        for (const auto& [idx, c] : basis[i].terms) family.omega.add_term(idx, p * c);
    }
    return family;
}

ConditionPolynomial volume_polynomial(const ParametricFamily& family) {
    auto vd = volume_data(family.omega);
    ConditionPolynomial result;
    result.meaning = ConditionPolynomial::Meaning::SymplecticVolume;
    result.poly = vd ? vd->second : Poly(family.params);
    return result;
}

std::vector<ConditionPolynomial> lefschetz_determinants(const CohomologyContext& ctx,
                                                        const ParametricFamily& family) {
    int n = ctx.algebra().dim / 2;
    std::vector<ConditionPolynomial> result;
    for (int k = 1; k <= n; ++k) {
        if (ctx.betti(n - k) != ctx.betti(n + k))
            throw MathError("Lefschetz matrix in degree " + std::to_string(n - k) +
                            " is not square: b_" + std::to_string(n - k) + " = " +
                            std::to_string(ctx.betti(n - k)) + " but b_" + std::to_string(n + k) +
                            " = " + std::to_string(ctx.betti(n + k)));
        auto cols = ctx.lefschetz_matrix(family.omega, k);
        int size = static_cast<int>(cols.size());
        std::vector<std::vector<Poly>> m(static_cast<size_t>(size),
                                         std::vector<Poly>(static_cast<size_t>(size)));
        for (int j = 0; j < size; ++j)
            for (int i = 0; i < size; ++i)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    lift_to(cols[static_cast<size_t>(j)][static_cast<size_t>(i)], family.params);
        std::function<Poly(const Poly&, const Poly&)> div = [](const Poly& a, const Poly& b) {
            if (b.is_constant()) return a * (Rational(1) / b.constant_value());
            auto q = poly_divides(b, a);
            if (!q) throw InternalError("inexact division in Bareiss elimination");
            return *q;
        };
        ConditionPolynomial cp;
        cp.meaning = ConditionPolynomial::Meaning::LefschetzDet;
        cp.k = k;
        cp.poly = bareiss_det<Poly>(std::move(m), div, Poly::constant(family.params, 1));
        result.push_back(std::move(cp));
    }
    return result;
}

bool vanishing_within(const Poly& p, const Poly& q) {
    if (q.is_zero()) return true;   // the zero polynomial vanishes everywhere
    if (p.is_zero()) return false;  // and nothing else has full vanishing locus
    Poly r = p;
    while (!r.is_constant()) {
        Poly g = poly_gcd(r, q);
        if (g.is_constant()) return false;
        auto quotient = poly_divides(g, r);
        if (!quotient) throw InternalError("gcd does not divide its argument");
        r = *quotient;
    }
    return true;
}

std::vector<std::map<std::string, Rational>> sample_points(const std::vector<std::string>& params,
                                                           int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::map<std::string, Rational>> points;
    points.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::map<std::string, Rational> pt;
        for (const auto& name : params) {
            long long den = 1 + static_cast<long long>(rng() % 10);
            long long num = static_cast<long long>(rng() % (20 * den + 1)) - 10 * den;
            pt[name] = Rational(num, den);
        }
        points.push_back(std::move(pt));
    }
    return points;
}

ComparisonVerdict condition_compare(const ConditionPolynomial& p, const ConditionPolynomial& q,
                                    unsigned long long seed) {
    if (!p.poly.vars().empty() && !q.poly.vars().empty() && p.poly.vars() != q.poly.vars())
        throw UsageError("condition polynomials over different parameter lists");
    ComparisonVerdict verdict;
    if (auto ratio = poly_proportional(p.poly, q.poly)) {
        verdict.kind = ComparisonVerdict::Kind::ProportionalEqual;
        verdict.ratio = *ratio;
        return verdict;
    }
    if (vanishing_within(p.poly, q.poly) && vanishing_within(q.poly, p.poly)) {
        verdict.kind = ComparisonVerdict::Kind::FactorwiseCompatible;
        return verdict;
    }
    const auto& params = p.poly.vars().empty() ? q.poly.vars() : p.poly.vars();
    const int sample_count = 200;
    for (const auto& pt : sample_points(params, sample_count, seed)) {
        bool pz = is_zero(p.poly.eval(pt));
        bool qz = is_zero(q.poly.eval(pt));
        if (pz != qz) {
            verdict.kind = ComparisonVerdict::Kind::Different;
            verdict.witness = pt;
            return verdict;
        }
    }
    verdict.kind = ComparisonVerdict::Kind::SampledConsistent;
    verdict.samples = sample_count;
    return verdict;
}

HLCVerdict hlc_everywhere(const CohomologyContext& ctx, const ParametricFamily& family,
                          unsigned long long seed) {
    HLCVerdict verdict;
    ConditionPolynomial volume = volume_polynomial(family);
    if (volume.poly.is_zero()) {
        verdict.kind = HLCVerdict::Kind::Unknown;
        verdict.reason = "no symplectic forms in family";
        return verdict;
    }
    auto dets = lefschetz_determinants(ctx, family);

    for (const auto& det : dets)
        if (det.poly.is_zero()) verdict.zero_determinants.push_back(det.k);
    if (!verdict.zero_determinants.empty()) {
        verdict.kind = HLCVerdict::Kind::NowhereHLC;
        return verdict;
    }

    bool all_certified = true;
    for (const auto& det : dets) {
        HLCVerdict::Certificate cert;
        if (auto ratio = poly_proportional(volume.poly, det.poly)) {
            cert.tier = HLCVerdict::Certificate::Tier::ProportionalEqual;
            cert.ratio = *ratio;
        } else if (vanishing_within(det.poly, volume.poly)) {
            // every zero of the determinant kills the volume, so every
            // symplectic member of the family has a surjective map
            cert.tier = HLCVerdict::Certificate::Tier::FactorwiseCompatible;
        } else {
            all_certified = false;
            break;
        }
        verdict.certificates[det.k] = cert;
    }
    if (all_certified) {
        verdict.kind = HLCVerdict::Kind::EverywhereHLC;
        return verdict;
    }

    verdict.certificates.clear();
    const int sample_count = 200;
    for (const auto& pt : sample_points(family.params, sample_count, seed)) {
        if (is_zero(volume.poly.eval(pt))) continue;
        ++verdict.symplectic_samples;
        bool hlc_here = true;
        for (const auto& det : dets)
            if (is_zero(det.poly.eval(pt))) { hlc_here = false; break; }
        if (hlc_here && verdict.hlc_witness.empty()) verdict.hlc_witness = pt;
        if (!hlc_here && verdict.non_hlc_witness.empty()) verdict.non_hlc_witness = pt;
    }
    if (verdict.symplectic_samples == 0) {
        verdict.kind = HLCVerdict::Kind::Unknown;
        verdict.reason = "no symplectic points among the samples";
    } else if (!verdict.hlc_witness.empty() && !verdict.non_hlc_witness.empty()) {
        verdict.kind = HLCVerdict::Kind::Mixed;
    } else if (!verdict.hlc_witness.empty()) {
        verdict.kind = HLCVerdict::Kind::SampledConsistent;
    } else {
        verdict.kind = HLCVerdict::Kind::Unknown;
        verdict.reason = "no HLC points among the symplectic samples despite nonzero determinants";
    }
    return verdict;
}

const char* verdict_name(HLCVerdict::Kind kind) {
    switch (kind) {
        case HLCVerdict::Kind::EverywhereHLC: return "EverywhereHLC";
        case HLCVerdict::Kind::NowhereHLC: return "NowhereHLC";
        case HLCVerdict::Kind::Mixed: return "Mixed";
        case HLCVerdict::Kind::SampledConsistent: return "SampledConsistent";
        case HLCVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

}  // namespace lefschetz
