#ifndef LEFSCHETZ_POLY_HPP
#define LEFSCHETZ_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

// Multivariate polynomial over the rationals: dense in variables, sparse in
// terms. Terms are kept in descending graded-lex order, so map iteration is
// the canonical rendering order and begin() is the leading term.
class Poly {
public:
    using Exponents = std::vector<int>;

    struct GrlexGreater {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    Poly() = default;  // the zero polynomial over the empty variable list
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero if empty).
    Rational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    // Leading coefficient scaled to 1 (zero stays zero).
    Poly monic() const;

    std::string str() const;

    // Internal term surgery; keeps the no-zero-coefficients invariant.
    void add_term(const Exponents& e, const Rational& c);

private:
    friend Poly lift_to(const Poly& p, const std::vector<std::string>& vars);

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// gcd normalized so the leading coefficient is 1; gcd(p, 0) = monic p.
Poly poly_gcd(const Poly& p, const Poly& q);

// Exact quotient q/p when p divides q, absent otherwise. p must be nonzero.
std::optional<Poly> poly_divides(const Poly& p, const Poly& q);

// r with q = r*p for a nonzero rational r; (0,0) yields 1.
std::optional<Rational> poly_proportional(const Poly& p, const Poly& q);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace lefschetz

#endif
