#include "lefschetz/formexpr.hpp"

#include <cctype>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

struct Cursor {
    std::string s;  // input with whitespace stripped
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    char take() { return s[pos++]; }
};

std::string take_digits(Cursor& c) {
    std::string out;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) out += c.take();
    return out;
}

// [coeff '*'] basis, with the sign already consumed by the caller
std::pair<IndexTuple, Rational> parse_term(Cursor& c, int dim) {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        std::string num = take_digits(c);
        std::string den;
        if (c.peek() == '/') {
            c.take();
            den = take_digits(c);
            if (den.empty()) throw UsageError("malformed rational near position " +
                                              std::to_string(c.pos));
        }
        coeff = parse_rational(den.empty() ? num : num + "/" + den);
        if (c.peek() != '*')
            throw UsageError("expected '*' between coefficient and basis element");
        c.take();
    }
    if (c.peek() != 'e') throw UsageError("expected a basis element 'e...' at position " +
                                          std::to_string(c.pos));
    c.take();
    IndexTuple indices;
    if (c.peek() == '{') {
        c.take();
        while (true) {
            std::string digits = take_digits(c);
            if (digits.empty()) throw UsageError("expected an index inside e{...}");
            indices.push_back(std::stoi(digits));
            if (c.peek() == ',') { c.take(); continue; }
            if (c.peek() == '}') { c.take(); break; }
            throw UsageError("expected ',' or '}' inside e{...}");
        }
    } else {
        if (dim >= 10)
            throw UsageError("dimension >= 10 requires the braces form e{i,j,...}");
        std::string digits = take_digits(c);
        if (digits.empty()) throw UsageError("basis element 'e' without indices");
        for (char ch : digits) indices.push_back(ch - '0');
    }
    for (int i : indices)
        if (i < 1 || i > dim)
            throw UsageError("index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(dim));
    return {indices, coeff};
}

}  // namespace

Form<Rational> parse_form_expression(const std::string& text, int dim) {
    Cursor c;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) c.s += ch;
    if (c.s.empty()) throw UsageError("empty form expression");

    Form<Rational> result;
    bool first = true;
    int sign = 1;
    if (c.peek() == '-') { c.take(); sign = -1; }
    while (true) {
        auto [indices, coeff] = parse_term(c, dim);
        // normalize the index tuple, absorbing the wedge sign
        Form<Rational> term = monomial_form<Rational>(dim, {}, sign < 0 ? -coeff : coeff);
        for (int i : indices) term = wedge(term, monomial_form<Rational>(dim, {i}, 1));
        if (first) {
            result = term;
            first = false;
        } else {
            if (term.degree != result.degree)
                throw UsageError("non-homogeneous expression: degree " +
                                 std::to_string(term.degree) + " term in a degree " +
                                 std::to_string(result.degree) + " form");
            result = result + term;
        }
        if (c.done()) break;
        char op = c.take();
        if (op == '+') sign = 1;
        else if (op == '-') sign = -1;
        else throw UsageError(std::string("unexpected character '") + op + "' in form expression");
    }
    return result;
}

}  // namespace lefschetz
