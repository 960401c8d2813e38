#ifndef LEFSCHETZ_FORM_HPP
#define LEFSCHETZ_FORM_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/poly.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

using IndexTuple = std::vector<int>;

// Wedge of two strictly increasing index tuples: merged tuple plus the sign
// of the sorting permutation, or absent when an index repeats.
inline std::optional<std::pair<IndexTuple, int>> wedge_indices(const IndexTuple& a,
                                                               const IndexTuple& b) {
    IndexTuple merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    int sign = 1;
    // insertion sort, counting transpositions
    for (size_t i = 1; i < merged.size(); ++i) {
        size_t j = i;
        while (j > 0 && merged[j - 1] > merged[j]) {
            std::swap(merged[j - 1], merged[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && merged[j - 1] == merged[j]) return std::nullopt;
    }
    return std::make_pair(merged, sign);
}

// Homogeneous exterior form with coefficients in an exact scalar ring R
// (Rational or Poly). Keys are strictly increasing index tuples; stored
// coefficients are nonzero.
template <typename R>
struct Form {
    int dim = 0;
    int degree = 0;
    std::map<IndexTuple, R> terms;

    Form() = default;
    Form(int dim_, int degree_) : dim(dim_), degree(degree_) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const IndexTuple& idx, const R& c) {
        if (static_cast<int>(idx.size()) != degree)
            throw InternalError("form term of wrong degree");
        auto [it, inserted] = terms.emplace(idx, c);
        if (!inserted) {
            it->second = it->second + c;
            if (lefschetz::is_zero(it->second)) terms.erase(it);
        } else if (lefschetz::is_zero(c)) {
            terms.erase(it);
        }
    }
};

template <typename R>
Form<R> monomial_form(int dim, const IndexTuple& idx, const R& c) {
    Form<R> f(dim, static_cast<int>(idx.size()));
    f.add_term(idx, c);
    return f;
}

template <typename R>
Form<R> operator+(const Form<R>& a, const Form<R>& b) {
    if (a.dim != b.dim || a.degree != b.degree)
        throw UsageError("adding forms of different degree or dimension");
    Form<R> r = a;
    for (const auto& [idx, c] : b.terms) r.add_term(idx, c);
    return r;
}

template <typename R>
Form<R> operator-(const Form<R>& a) {
    Form<R> r(a.dim, a.degree);
    for (const auto& [idx, c] : a.terms) r.terms[idx] = -c;
    return r;
}

template <typename R>
Form<R> operator-(const Form<R>& a, const Form<R>& b) {
    return a + (-b);
}

template <typename R, typename S>
Form<R> scale(const Form<R>& a, const S& c) {
    Form<R> r(a.dim, a.degree);
    for (const auto& [idx, v] : a.terms) {
        R w = v * c;
        if (!lefschetz::is_zero(w)) r.terms[idx] = w;
    }
    return r;
}

template <typename R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
    if (a.dim != b.dim) throw UsageError("wedge of forms over different algebras");
    Form<R> r(a.dim, a.degree + b.degree);
    if (r.degree > a.dim) return r;
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            auto merged = wedge_indices(ia, ib);
            if (!merged) continue;
            R c = ca * cb;
            if (merged->second < 0) c = -c;
            r.add_term(merged->first, c);
        }
    return r;
}

// One value of the coefficient ring, shaped like the coefficients of f.
template <typename R>
R ring_one(const Form<R>&);

template <>
inline Rational ring_one<Rational>(const Form<Rational>&) { return 1; }

template <>
inline Poly ring_one<Poly>(const Form<Poly>& f) {
    if (!f.terms.empty()) return Poly::constant(f.terms.begin()->second.vars(), 1);
    return Poly::constant({}, 1);
}

template <typename R>
Form<R> wedge_pow(const Form<R>& a, int k) {
    Form<R> r(a.dim, 0);
    r.add_term({}, ring_one<R>(a));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

inline std::string coeff_str(const Rational& c) { return rational_str(c); }
inline std::string coeff_str(const Poly& p) {
    if (p.terms().size() <= 1) return p.str();
    return "(" + p.str() + ")";
}

inline std::string indices_str(const IndexTuple& idx, int dim) {
    std::string s = "e";
    if (dim <= 9) {
        for (int i : idx) s += std::to_string(i);
    } else {
        s += "{";
        for (size_t k = 0; k < idx.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(idx[k]);
        }
        s += "}";
    }
    return s;
}

// "e12 + 2*e34 - 1/3*e56"; polynomial coefficients are parenthesized.
template <typename R>
std::string form_str(const Form<R>& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : f.terms) {
        std::string cs = coeff_str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out << "-"; cs = cs.substr(1); }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (idx.empty()) {
            out << cs;
        } else if (cs == "1") {
            out << indices_str(idx, f.dim);
        } else {
            out << cs << "*" << indices_str(idx, f.dim);
        }
    }
    return out.str();
}

// Substitute rationals for the parameters of a Form<Poly>.
inline Form<Rational> eval_form(const Form<Poly>& f,
                                const std::map<std::string, Rational>& point) {
    Form<Rational> r(f.dim, f.degree);
    for (const auto& [idx, p] : f.terms) {
        Rational v = p.eval(point);
        if (!is_zero(v)) r.terms[idx] = v;
    }
    return r;
}

inline Form<Poly> poly_form(const Form<Rational>& f, const std::vector<std::string>& vars) {
    Form<Poly> r(f.dim, f.degree);
    for (const auto& [idx, c] : f.terms) r.terms[idx] = Poly::constant(vars, c);
    return r;
}

}  // namespace lefschetz

#endif
