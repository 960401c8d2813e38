#ifndef LEFSCHETZ_EXTERIOR_HPP
#define LEFSCHETZ_EXTERIOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/linalg.hpp"

namespace lefschetz {

// Strictly increasing k-tuples from 1..dim in lexicographic order: the
// monomial basis of Λ^k used everywhere for coordinates.
const std::vector<IndexTuple>& basis_tuples(int dim, int k);
int basis_index(int dim, int k, const IndexTuple& idx);

template <typename R>
std::vector<R> form_coords(const Form<R>& f) {
    const auto& basis = basis_tuples(f.dim, f.degree);
    std::vector<R> v(basis.size());
    for (const auto& [idx, c] : f.terms) v[static_cast<size_t>(basis_index(f.dim, f.degree, idx))] = c;
    return v;
}

template <typename R>
Form<R> form_from_coords(int dim, int k, const std::vector<R>& v) {
    Form<R> f(dim, k);
    const auto& basis = basis_tuples(dim, k);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!is_zero(v[i])) f.terms[basis[i]] = v[i];
    return f;
}

// The antisymmetric coefficient matrix of a 2-form, entries read directly.
QMat two_form_matrix(const Form<Rational>& omega);

// The bilinear form induced on the coframe by a nondegenerate omega,
// normalized so that omega = e12 + e34 + ... gives pairing(e^1, e^2) = +1.
QMat inverse_pairing_matrix(const Form<Rational>& omega);

// Gram-determinant extension of a coframe pairing to k-forms; on 0-forms
// the empty determinant gives r*s.
template <typename R>
R omega_inv_pairing(const QMat& pairing, const Form<R>& a, const Form<R>& b) {
    if (a.degree != b.degree) throw UsageError("pairing of forms of different degree");
    R total{};
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            int k = a.degree;
            QMat gram(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    gram.at(r, c) = pairing.at(ia[static_cast<size_t>(r)] - 1,
                                               ib[static_cast<size_t>(c)] - 1);
            Rational g = det(gram);
            if (is_zero(g)) continue;
            total = total + ca * cb * g;
        }
    return total;
}

// omega^n / n! and the coefficient of e^{1..2n} in omega^n; absent when that
// coefficient vanishes (the candidate is degenerate).
template <typename R>
std::optional<std::pair<Form<R>, R>> volume_data(const Form<R>& omega) {
    if (omega.degree != 2) throw UsageError("volume_data expects a 2-form");
    if (omega.dim % 2 != 0) throw UsageError("volume_data needs an even-dimensional algebra");
    int n = omega.dim / 2;
    Form<R> top = wedge_pow(omega, n);
    IndexTuple full(static_cast<size_t>(omega.dim));
    for (int i = 0; i < omega.dim; ++i) full[static_cast<size_t>(i)] = i + 1;
    auto it = top.terms.find(full);
    if (it == top.terms.end()) return std::nullopt;
    R coeff = it->second;
    Rational nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    Form<R> vol = scale(top, Rational(1) / nfact);
    return std::make_pair(vol, coeff);
}

}  // namespace lefschetz

#endif
