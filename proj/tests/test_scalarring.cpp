#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lefschetz/poly.hpp"

using namespace lefschetz;

namespace {

const std::vector<std::string> kVars = {"c", "c1", "c2", "c3", "a"};

Poly v(const std::string& name) { return Poly::variable(kVars, name); }
Poly k(long long n) { return Poly::constant(kVars, n); }

// c^3 - c*c1^2 - c*c2^2 - c*c3^2 + c*a^2 - c*c2*c3
//   + c1^2*c2 + c1^2*c3 - c2*c3^2 - c2*a^2 - c2^2*c3 - c3*a^2
Poly volume_cubic() {
    Poly c = v("c"), c1 = v("c1"), c2 = v("c2"), c3 = v("c3"), a = v("a");
    return c * c * c - c * c1 * c1 - c * c2 * c2 - c * c3 * c3 + c * a * a - c * c2 * c3 +
           c1 * c1 * c2 + c1 * c1 * c3 - c2 * c3 * c3 - c2 * a * a - c2 * c2 * c3 - c3 * a * a;
}

// c^2 - c1^2 + a^2 + c*c2 + c*c3 + c2*c3
Poly lefschetz_quadratic() {
    Poly c = v("c"), c1 = v("c1"), c2 = v("c2"), c3 = v("c3"), a = v("a");
    return c * c - c1 * c1 + a * a + c * c2 + c * c3 + c2 * c3;
}

Poly random_poly(std::mt19937_64& rng, int max_terms, int max_deg) {
    Poly p(kVars);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Poly::Exponents e(kVars.size(), 0);
        for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        long long num = static_cast<long long>(rng() % 11) - 5;
        p.add_term(e, Rational(num));
    }
    return p;
}

std::map<std::string, Rational> random_point(std::mt19937_64& rng) {
    std::map<std::string, Rational> pt;
    for (const auto& name : kVars) {
        long long num = static_cast<long long>(rng() % 21) - 10;
        long long den = 1 + static_cast<long long>(rng() % 5);
        pt[name] = Rational(num, den);
    }
    return pt;
}

}  // namespace

TEST_CASE("gcd of monomials extracts the common factor") {
    Poly g = poly_gcd(v("c1") * v("c2"), v("c1") * v("c3"));
    CHECK(g == v("c1"));
}

TEST_CASE("gcd with zero normalizes the other argument") {
    Poly p = k(3) * v("c1") * v("c2");
    CHECK(poly_gcd(p, Poly(kVars)) == v("c1") * v("c2"));
    CHECK(poly_gcd(Poly(kVars), p) == v("c1") * v("c2"));
    CHECK(poly_gcd(Poly(kVars), Poly(kVars)).is_zero());
}

TEST_CASE("gcd of the factored Lefschetz condition against its factor") {
    Poly d = v("c") - v("c2") - v("c3");
    Poly q = lefschetz_quadratic();
    CHECK(poly_gcd(d * q, q) == q);  // q is already monic in graded lex
}

TEST_CASE("the cubic volume condition factors as (c-c2-c3) times the quadratic") {
    Poly d = v("c") - v("c2") - v("c3");
    auto quotient = poly_divides(d, volume_cubic());
    REQUIRE(quotient.has_value());
    CHECK(*quotient == lefschetz_quadratic());
}

TEST_CASE("divides: negative and trivial cases") {
    CHECK_FALSE(poly_divides(v("c1"), v("c2")).has_value());
    Poly p = v("c1") + k(2) * v("c2");
    auto q = poly_divides(p, p * p);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    CHECK_THROWS_AS(poly_divides(Poly(kVars), p), UsageError);
}

TEST_CASE("proportionality detection") {
    Poly p = v("c1") * v("c2") + k(3) * v("c3");
    auto r = poly_proportional(p, p * Rational(2));
    REQUIRE(r.has_value());
    CHECK(*r == Rational(2));
    CHECK_FALSE(poly_proportional(v("c1"), v("c2")).has_value());
    auto both_zero = poly_proportional(Poly(kVars), Poly(kVars));
    REQUIRE(both_zero.has_value());
    CHECK(*both_zero == Rational(1));
    CHECK_FALSE(poly_proportional(Poly(kVars), v("c1")).has_value());
}

TEST_CASE("expanded factorization equals the cubic with ratio one") {
    Poly product = (v("c") - v("c2") - v("c3")) * lefschetz_quadratic();
    auto r = poly_proportional(volume_cubic() * Rational(6), product * Rational(6));
    REQUIRE(r.has_value());
    CHECK(*r == Rational(1));
}

TEST_CASE("evaluation") {
    Poly c1 = v("c1"), c2 = v("c2"), c3 = v("c3");
    Poly p = c1 * (c2 * c3 + v("a") * v("c"));
    std::map<std::string, Rational> pt = {
        {"c", 0}, {"c1", 1}, {"c2", 1}, {"c3", 1}, {"a", 0}};
    CHECK(p.eval(pt) == Rational(1));

    std::map<std::string, Rational> zero = {
        {"c", 0}, {"c1", 0}, {"c2", 0}, {"c3", 0}, {"a", 0}};
    CHECK((p + k(7)).eval(zero) == Rational(7));

    std::map<std::string, Rational> c_only = {
        {"c", 1}, {"c1", 0}, {"c2", 0}, {"c3", 0}, {"a", 0}};
    CHECK(volume_cubic().eval(c_only) == Rational(1));

    std::map<std::string, Rational> missing = {{"c", 1}};
    CHECK_THROWS_AS(p.eval(missing), UsageError);
}

TEST_CASE("mismatched variable lists are a usage error") {
    Poly other = Poly::variable({"x", "y"}, "x");
    CHECK_THROWS_AS(poly_gcd(v("c1"), other), UsageError);
    CHECK_THROWS_AS(v("c1") + other, UsageError);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937_64 rng(20260810);
    for (int iter = 0; iter < 60; ++iter) {
        Poly p = random_poly(rng, 4, 3);
        Poly q = random_poly(rng, 4, 3);
        Poly r = random_poly(rng, 4, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("divides and gcd are consistent with multiplication") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        Poly p = random_poly(rng, 3, 2);
        Poly q = random_poly(rng, 3, 2);
        if (p.is_zero() || q.is_zero()) continue;
        Poly prod = p * q;
        auto t = poly_divides(p, prod);
        REQUIRE(t.has_value());
        CHECK(p * *t == prod);

        Poly g = poly_gcd(p, q);
        CHECK(poly_divides(g, p).has_value());
        CHECK(poly_divides(g, q).has_value());
        Poly cp = *poly_divides(g, p);
        Poly cq = *poly_divides(g, q);
        CHECK(cp * g == p);
        CHECK(cq * g == q);
    }
}

TEST_CASE("proportional pairs agree at random evaluation points") {
    std::mt19937_64 rng(1234);
    Poly p = random_poly(rng, 5, 3);
    Rational ratio(7, 3);
    Poly q = p * ratio;
    auto r = poly_proportional(p, q);
    REQUIRE(r.has_value());
    CHECK(*r == ratio);
    for (int i = 0; i < 10; ++i) {
        auto pt = random_point(rng);
        CHECK(q.eval(pt) == *r * p.eval(pt));
    }
}

TEST_CASE("monic normalization is idempotent") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 20; ++iter) {
        Poly p = random_poly(rng, 4, 3);
        Poly m = p.monic();
        CHECK(m.monic() == m);
        if (!p.is_zero()) CHECK(m.terms().begin()->second == Rational(1));
    }
}

TEST_CASE("rendering uses graded-lex order and integer or p/q coefficients") {
    std::vector<std::string> nak = {"c1", "c2", "c3", "c4", "c5"};
    auto nv = [&](const char* n) { return Poly::variable(nak, n); };
    Poly vol = (nv("c1") * nv("c2") * nv("c3") + nv("c1") * nv("c4") * nv("c5")) * Rational(6);
    CHECK(vol.str() == "6*c1*c2*c3 + 6*c1*c4*c5");

    Poly mixed = v("c") * v("c") - v("a") * Rational(1, 3) + k(2);
    CHECK(mixed.str() == "c^2 - 1/3*a + 2");
    CHECK(Poly(kVars).str() == "0");
}
