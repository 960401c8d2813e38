#include "lefschetz/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

bool Poly::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lex on exponent vectors, earlier variables more significant
}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!lefschetz::is_zero(c)) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw UsageError("unknown variable '" + name + "'");
    Exponents e(p.vars_.size(), 0);
    e[static_cast<size_t>(it - p.vars_.begin())] = 1;
    p.terms_[e] = 1;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;  // leading term has maximal degree
    return std::accumulate(e.begin(), e.end(), 0);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw InternalError("exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (lefschetz::is_zero(it->second)) terms_.erase(it);
    } else if (lefschetz::is_zero(c)) {
        terms_.erase(it);
    }
}

// A poly over the empty variable list is a plain constant and embeds into any
// ring; everything else must match variable lists exactly.
Poly lift_to(const Poly& p, const std::vector<std::string>& vars) {
    if (p.vars_ == vars) return p;
    if (p.vars_.empty() && p.is_constant())
        return Poly::constant(vars, p.constant_value());
    throw UsageError("polynomials over different variable lists");
}

static std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b) {
    if (a.vars() == b.vars()) return {a, b};
    if (a.vars().empty()) return {lift_to(a, b.vars()), b};
    return {a, lift_to(b, a.vars())};
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    auto [a, b] = aligned(*this, o);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    auto [a, b] = aligned(*this, o);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(vars_);
    if (lefschetz::is_zero(c)) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    auto [a, b] = aligned(*this, o);
    return a.terms_ == b.terms_;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw UsageError("negative polynomial power");
    Poly r = Poly::constant(vars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw UsageError("evaluation point misses variable '" + vars_[i] + "'");
        vals[i] = it->second;
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        total += t;
    }
    return total;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / terms_.begin()->second);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rational_str(a);
        } else {
            if (a != 1) out << rational_str(a) << "*";
            out << mono;
        }
    }
    return out.str();
}

std::optional<Poly> poly_divides(const Poly& p, const Poly& q) {
    if (p.is_zero()) throw UsageError("division by the zero polynomial");
    auto [a, b] = aligned(p, q);
    Poly quotient(a.vars());
    Poly r = b;
    const auto& lead = a.terms().begin();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        const auto& [pe, pc] = *lead;
        Poly::Exponents qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - pe[i];
            if (qe[i] < 0) return std::nullopt;  // leading term not divisible
        }
        Poly mono(a.vars());
        mono.add_term(qe, rc / pc);
        quotient = quotient + mono;
        r = r - mono * a;
    }
    return quotient;
}

std::optional<Rational> poly_proportional(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) return Rational(1);
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    auto [a, b] = aligned(p, q);
    if (a.terms().size() != b.terms().size()) return std::nullopt;
    Rational ratio = 0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        Rational r = ib->second / ia->second;
        if (lefschetz::is_zero(ratio)) ratio = r;
        else if (r != ratio) return std::nullopt;
    }
    return ratio;
}

// --- gcd via content/primitive-part recursion on the last variable ---------

namespace {

// View of a polynomial as univariate in its last variable, with coefficients
// over the remaining variables.
using UniCoeffs = std::map<int, Poly>;  // degree in last var -> coefficient

UniCoeffs to_univariate(const Poly& p) {
    std::vector<std::string> inner(p.vars().begin(), p.vars().end() - 1);
    UniCoeffs u;
    for (const auto& [e, c] : p.terms()) {
        int d = e.back();
        Poly::Exponents ie(e.begin(), e.end() - 1);
        auto it = u.find(d);
        if (it == u.end()) it = u.emplace(d, Poly(inner)).first;
        it->second.add_term(ie, c);
    }
    for (auto it = u.begin(); it != u.end();)
        it = it->second.is_zero() ? u.erase(it) : std::next(it);
    return u;
}

Poly from_univariate(const UniCoeffs& u, const std::vector<std::string>& vars) {
    Poly p(vars);
    for (const auto& [d, coeff] : u)
        for (const auto& [e, c] : coeff.terms()) {
            Poly::Exponents full = e;
            full.push_back(d);
            p.add_term(full, c);
        }
    return p;
}

// Re-embed a polynomial over the inner variables (all but the last).
Poly embed_inner(const Poly& p, const std::vector<std::string>& vars) {
    Poly r(vars);
    for (const auto& [e, c] : p.terms()) {
        Poly::Exponents full = e;
        full.push_back(0);
        r.add_term(full, c);
    }
    return r;
}

int uni_degree(const UniCoeffs& u) { return u.empty() ? -1 : u.rbegin()->first; }

bool uni_is_zero(const UniCoeffs& u) { return u.empty(); }

UniCoeffs uni_scale(const UniCoeffs& u, const Poly& f) {
    UniCoeffs r;
    for (const auto& [d, c] : u) {
        Poly v = c * f;
        if (!v.is_zero()) r[d] = v;
    }
    return r;
}

UniCoeffs uni_sub(const UniCoeffs& a, const UniCoeffs& b) {
    UniCoeffs r = a;
    for (const auto& [d, c] : b) {
        auto it = r.find(d);
        if (it == r.end()) {
            r[d] = -c;
        } else {
            it->second = it->second - c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

UniCoeffs uni_shift_mul(const UniCoeffs& u, int shift, const Poly& f) {
    UniCoeffs r;
    for (const auto& [d, c] : u) {
        Poly v = c * f;
        if (!v.is_zero()) r[d + shift] = v;
    }
    return r;
}

// Pseudo-remainder of a by b in the last variable (both nonzero, deg a >= 0).
UniCoeffs uni_prem(UniCoeffs a, const UniCoeffs& b) {
    const Poly& lb = b.rbegin()->second;
    int db = uni_degree(b);
    while (!uni_is_zero(a) && uni_degree(a) >= db) {
        const Poly la = a.rbegin()->second;
        int da = uni_degree(a);
        a = uni_sub(uni_scale(a, lb), uni_shift_mul(b, da - db, la));
    }
    return a;
}

Poly exact_div(const Poly& num, const Poly& den) {
    auto q = poly_divides(den, num);
    if (!q) throw InternalError("inexact division in gcd kernel");
    return *q;
}

Poly uni_content(const UniCoeffs& u) {
    Poly c;
    for (const auto& [d, coeff] : u) c = poly_gcd(c, coeff);
    return c;
}

UniCoeffs uni_primitive(const UniCoeffs& u, const Poly& content) {
    UniCoeffs r;
    for (const auto& [d, c] : u) r[d] = exact_div(c, content);
    return r;
}

// Classic monic Euclid over Q for the single-variable base case.
Poly gcd_univariate_field(Poly a, Poly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        Poly r = a;
        const auto& [be, bc] = *b.terms().begin();
        int db = std::accumulate(be.begin(), be.end(), 0);
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms().begin();
            int dr = std::accumulate(re.begin(), re.end(), 0);
            if (dr < db) break;
            Poly mono(a.vars());
            Poly::Exponents qe(re.size());
            qe[0] = dr - db;
            mono.add_term(qe, rc / bc);
            r = r - mono * b;
        }
        a = b;
        b = r;
    }
    return a.monic();
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    auto [a, b] = aligned(p, q);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
    size_t nvars = a.vars().size();
    if (nvars == 1) return gcd_univariate_field(a, b);

    UniCoeffs ua = to_univariate(a);
    UniCoeffs ub = to_univariate(b);
    Poly ca = uni_content(ua);
    Poly cb = uni_content(ub);
    Poly content = poly_gcd(ca, cb);
    UniCoeffs pa = uni_primitive(ua, ca);
    UniCoeffs pb = uni_primitive(ub, cb);

    // primitive PRS
    if (uni_degree(pa) < uni_degree(pb)) std::swap(pa, pb);
    while (!uni_is_zero(pb)) {
        UniCoeffs r = uni_prem(pa, pb);
        pa = std::move(pb);
        if (uni_is_zero(r)) {
            pb.clear();
        } else {
            pb = uni_primitive(r, uni_content(r));
        }
    }
    UniCoeffs g = uni_primitive(pa, uni_content(pa));
    Poly result = from_univariate(g, a.vars()) * embed_inner(content, a.vars());
    return result.monic();
}

}  // namespace lefschetz
