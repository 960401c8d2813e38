#include <fstream>

#include <json.hpp>

#include "lefschetz/errors.hpp"
#include "lefschetz/liealgebra.hpp"

namespace lefschetz {

using nlohmann::json;

namespace {

Rational coeff_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw UsageError("structure coefficient must be a rational string or integer");
}

}  // namespace

LieAlgebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    LieAlgebra g;
    if (!j.is_object() || !j.contains("dim")) throw UsageError("algebra JSON needs a 'dim' field");
    g.name = j.value("name", std::string("unnamed"));
    if (!j["dim"].is_number_integer()) throw UsageError("'dim' must be an integer");
    g.dim = j["dim"].get<int>();
    if (g.dim < 1 || g.dim > 16) throw UsageError("algebra dimension must be in 1..16");
    g.d.assign(static_cast<size_t>(g.dim), {});
    if (j.contains("d")) {
        if (!j["d"].is_object()) throw UsageError("'d' must map generator indices to triples");
        for (const auto& [key, triples] : j["d"].items()) {
            int k = 0;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                throw UsageError("generator key '" + key + "' is not an index");
            }
            if (k < 1 || k > g.dim) throw UsageError("generator index " + key + " out of range");
            if (!triples.is_array()) throw UsageError("'d." + key + "' must be an array of triples");
            for (const auto& t : triples) {
                if (!t.is_array() || t.size() != 3)
                    throw UsageError("'d." + key + "' entries must be [i, j, coeff]");
                StructureTerm term;
                term.i = t[0].get<int>();
                term.j = t[1].get<int>();
                term.c = coeff_from_json(t[2]);
                if (is_zero(term.c)) continue;
                g.d[static_cast<size_t>(k - 1)].push_back(term);
            }
        }
    }
    g.claimed_completely_solvable = j.value("claimed_completely_solvable", false);
    g.claimed_lattice = j.value("claimed_lattice", false);
    check_well_formed(g);
    return g;
}

std::string algebra_to_json(const LieAlgebra& g) {
    json j;
    j["name"] = g.name;
    j["dim"] = g.dim;
    json d = json::object();
    for (int k = 1; k <= g.dim; ++k) {
        if (g.d_of(k).empty()) continue;
        json triples = json::array();
        for (const auto& t : g.d_of(k))
            triples.push_back(json::array({t.i, t.j, rational_str(t.c)}));
        d[std::to_string(k)] = triples;
    }
    j["d"] = d;
    j["claimed_completely_solvable"] = g.claimed_completely_solvable;
    j["claimed_lattice"] = g.claimed_lattice;
    return j.dump(2) + "\n";
}

LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open algebra file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    LieAlgebra g = algebra_from_json(text);
    Diagnostics diag = validate(g);
    if (!diag.jacobi_ok)
        throw MathError("algebra '" + g.name + "' violates the Jacobi identity: " + diag.detail);
    return g;
}

void save_algebra(const LieAlgebra& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write algebra file '" + path + "'");
    out << algebra_to_json(g);
}

}  // namespace lefschetz
