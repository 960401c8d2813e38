#ifndef LEFSCHETZ_PARAMETRIC_HPP
#define LEFSCHETZ_PARAMETRIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/cohomology.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/poly.hpp"

namespace lefschetz {

inline constexpr unsigned long long kDefaultSeed = 0x4c454653;  // fixed sampling seed

// The cohomologous family Omega = sum of parameters times H^2 classes (or a
// user-supplied closed basis). The d(eta) direction is irrelevant at class
// level and is not parametrized.
struct ParametricFamily {
    std::vector<std::string> params;
    Form<Poly> omega;
};

ParametricFamily generic_family(
    const CohomologyContext& ctx,
    const std::optional<std::vector<std::pair<std::string, Form<Rational>>>>& basis_override =
        std::nullopt);

struct ConditionPolynomial {
    enum class Meaning { SymplecticVolume, LefschetzDet };
    Poly poly;
    Meaning meaning = Meaning::SymplecticVolume;
    int k = 0;  // Lefschetz power for LefschetzDet
};

// Coefficient of e^{1..2n} in Omega^n.
ConditionPolynomial volume_polynomial(const ParametricFamily& family);

// Determinants of [· ∧ Omega^k] : H^{n-k} -> H^{n+k}, k = 1..n, computed by
// fraction-free (Bareiss) elimination over the polynomial ring.
std::vector<ConditionPolynomial> lefschetz_determinants(const CohomologyContext& ctx,
                                                        const ParametricFamily& family);

// true when every irreducible factor of p divides q, i.e. {p = 0} ⊆ {q = 0};
// decided by repeated gcd extraction, no factorization
bool vanishing_within(const Poly& p, const Poly& q);

struct ComparisonVerdict {
    enum class Kind { ProportionalEqual, FactorwiseCompatible, SampledConsistent, Different };
    Kind kind = Kind::Different;
    Rational ratio;                            // ProportionalEqual
    int samples = 0;                           // SampledConsistent
    std::map<std::string, Rational> witness;   // Different: exactly one vanishes here
};

ComparisonVerdict condition_compare(const ConditionPolynomial& p, const ConditionPolynomial& q,
                                    unsigned long long seed = kDefaultSeed);

struct HLCVerdict {
    enum class Kind { EverywhereHLC, NowhereHLC, Mixed, SampledConsistent, Unknown };

    struct Certificate {
        enum class Tier { ProportionalEqual, FactorwiseCompatible };
        Tier tier = Tier::FactorwiseCompatible;
        Rational ratio;  // for ProportionalEqual: det = ratio * volume
    };

    Kind kind = Kind::Unknown;
    std::map<int, Certificate> certificates;           // EverywhereHLC: per k
    std::vector<int> zero_determinants;                // NowhereHLC
    std::map<std::string, Rational> hlc_witness;       // Mixed
    std::map<std::string, Rational> non_hlc_witness;   // Mixed
    int symplectic_samples = 0;                        // SampledConsistent
    std::string reason;                                // Unknown
};

HLCVerdict hlc_everywhere(const CohomologyContext& ctx, const ParametricFamily& family,
                          unsigned long long seed = kDefaultSeed);

// Deterministic rational sample points: coordinates in [-10, 10] with
// denominator at most 10.
std::vector<std::map<std::string, Rational>> sample_points(const std::vector<std::string>& params,
                                                           int count, unsigned long long seed);

const char* verdict_name(HLCVerdict::Kind kind);

}  // namespace lefschetz

#endif
