#include "lefschetz/exterior.hpp"

#include <functional>
#include <map>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

struct BasisTable {
    std::vector<IndexTuple> tuples;
    std::map<IndexTuple, int> index;
};

const BasisTable& basis_table(int dim, int k) {
    static std::map<std::pair<int, int>, BasisTable> cache;
    auto key = std::make_pair(dim, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    BasisTable table;
    if (k >= 0 && k <= dim) {
        IndexTuple current(static_cast<size_t>(k));
        // lexicographic enumeration of k-subsets of 1..dim
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                table.index[current] = static_cast<int>(table.tuples.size());
                table.tuples.push_back(current);
                return;
            }
            for (int v = start; v <= dim - (k - pos - 1); ++v) {
                current[static_cast<size_t>(pos)] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 1);
    }
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

const std::vector<IndexTuple>& basis_tuples(int dim, int k) { return basis_table(dim, k).tuples; }

int basis_index(int dim, int k, const IndexTuple& idx) {
    const auto& table = basis_table(dim, k);
    auto it = table.index.find(idx);
    if (it == table.index.end()) throw InternalError("index tuple outside basis");
    return it->second;
}

QMat two_form_matrix(const Form<Rational>& omega) {
    if (omega.degree != 2) throw UsageError("expected a 2-form");
    QMat m(omega.dim, omega.dim);
    for (const auto& [idx, c] : omega.terms) {
        m.at(idx[0] - 1, idx[1] - 1) = c;
        m.at(idx[1] - 1, idx[0] - 1) = -c;
    }
    return m;
}

QMat inverse_pairing_matrix(const Form<Rational>& omega) {
    QMat m = two_form_matrix(omega);
    // inverse of the transpose: for the standard form this gives the same
    // block pattern back, anchoring pairing(e^1, e^2) = +1
    return inverse(transpose(m));
}

}  // namespace lefschetz
