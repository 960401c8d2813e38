#include "lefschetz/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lefschetz/almostkaehler.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/formexpr.hpp"
#include "lefschetz/symplectic.hpp"

namespace lefschetz {

using nlohmann::json;

namespace {

struct ResolvedAlgebra {
    LieAlgebra algebra;
    const CatalogEntry* entry = nullptr;  // null for file-loaded algebras
};

bool is_catalog_name(const std::string& s) {
    for (const auto& n : catalog_names())
        if (n == s) return true;
    return false;
}

ResolvedAlgebra resolve_algebra(const std::string& source) {
    if (is_catalog_name(source)) return {catalog_get(source), &catalog_entry(source)};
    if (std::filesystem::exists(source)) {
        LieAlgebra g = load_algebra(source);  // fatal on a Jacobi violation
        Diagnostics diag = validate(g);
        if (!diag.unimodular)
            std::cerr << "warning: '" << g.name << "' is not unimodular (" << diag.detail
                      << "); Poincare duality of the invariant cohomology may fail\n";
        return {std::move(g), nullptr};
    }
    throw UsageError("'" + source + "' is neither a catalog algebra nor a readable file");
}

Form<Rational> resolve_omega(const CommandRequest& req, const ResolvedAlgebra& res) {
    if (req.omega_text) return parse_form_expression(*req.omega_text, res.algebra.dim);
    if (res.entry && res.entry->omega) return *res.entry->omega;
    throw UsageError("no --omega given and the algebra has no catalog symplectic form");
}

std::string scope_label(const LieAlgebra& g) {
    return g.claimed_completely_solvable
               ? "de Rham cohomology (invariant forms; Hattori)"
               : "invariant cohomology (Mostow identification not verified)";
}

json point_json(const std::map<std::string, Rational>& pt) {
    json out = json::object();
    for (const auto& [name, value] : pt) out[name] = rational_str(value);
    return out;
}

std::vector<std::pair<std::string, Form<Rational>>> parse_family_spec(const std::string& text,
                                                                      int dim) {
    std::vector<std::pair<std::string, Form<Rational>>> basis;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ';')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError("family entries must look like name:expr (got '" + item + "')");
        std::string name = item.substr(0, colon);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) throw UsageError("empty parameter name in family spec");
        basis.emplace_back(name, parse_form_expression(item.substr(colon + 1), dim));
    }
    if (basis.empty()) throw UsageError("empty family spec");
    return basis;
}

Report cmd_list() {
    Report report;
    std::ostringstream out;
    json entries = json::array();
    out << "catalog algebras:\n";
    for (const auto& name : catalog_names()) {
        const auto& entry = catalog_entry(name);
        out << "  " << name << "  (dim " << entry.algebra.dim << ")  " << entry.description;
        json e = {{"name", name},
                  {"dim", entry.algebra.dim},
                  {"description", entry.description},
                  {"completely_solvable", entry.algebra.claimed_completely_solvable}};
        if (entry.omega) {
            out << "  omega: " << form_str(*entry.omega);
            e["omega"] = form_str(*entry.omega);
        }
        out << "\n";
        entries.push_back(e);
    }
    report.human = out.str();
    report.json = entries;
    return report;
}

Report cmd_validate(const CommandRequest& req) {
    // unlike the other commands, a Jacobi violation here is a reported result
    LieAlgebra g;
    if (is_catalog_name(req.algebra)) {
        g = catalog_get(req.algebra);
    } else if (std::filesystem::exists(req.algebra)) {
        std::ifstream in(req.algebra);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        g = algebra_from_json(text);
    } else {
        throw UsageError("'" + req.algebra + "' is neither a catalog algebra nor a readable file");
    }
    Diagnostics diag = validate(g);
    Report report;
    report.json = {{"algebra", g.name},
                   {"jacobi_ok", diag.jacobi_ok},
                   {"unimodular", diag.unimodular},
                   {"detail", diag.detail}};
    std::ostringstream out;
    out << "algebra: " << g.name << " (dim " << g.dim << ")\n";
    out << "  jacobi_ok:  " << (diag.jacobi_ok ? "true" : "false") << "\n";
    out << "  unimodular: " << (diag.unimodular ? "true" : "false") << "\n";
    if (!diag.jacobi_ok) out << "  fatal: " << diag.detail << "\n";
    else if (!diag.unimodular) out << "  warning: not unimodular; " << diag.detail << "\n";
    report.human = out.str();
    report.status = diag.jacobi_ok ? 0 : 1;
    return report;
}

Report cmd_betti(const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    auto betti = ctx.betti_all();
    Report report;
    std::ostringstream out;
    out << res.algebra.name << " " << scope_label(res.algebra) << "\nb:";
    for (int b : betti) out << " " << b;
    out << "\n";
    report.human = out.str();
    report.json = {{"algebra", res.algebra.name},
                   {"betti", betti},
                   {"scope", scope_label(res.algebra)}};
    return report;
}

Report cmd_cohomology(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Report report;
    std::ostringstream out;
    json bases = json::object();
    int lo = req.degree.value_or(0);
    int hi = req.degree.value_or(res.algebra.dim);
    if (lo < 0 || hi > res.algebra.dim) throw UsageError("degree out of range");
    out << res.algebra.name << " " << scope_label(res.algebra) << "\n";
    for (int k = lo; k <= hi; ++k) {
        const auto& basis = ctx.basis(k);
        out << "H^" << k << " (dim " << basis.dim() << "):";
        json reps = json::array();
        for (const auto& rep : basis.reps) {
            out << "  " << form_str(rep);
            reps.push_back(form_str(rep));
        }
        out << "\n";
        bases[std::to_string(k)] = reps;
    }
    report.human = out.str();
    report.json = {{"algebra", res.algebra.name}, {"bases", bases}};
    return report;
}

Report cmd_hlc(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Form<Rational> omega = resolve_omega(req, res);
    SymplecticStructure s = make_symplectic(res.algebra, omega);
    HLCReport hlc = hlc_check(ctx, s);
    Report report;
    std::ostringstream out;
    out << res.algebra.name << "  omega = " << form_str(omega) << "\n";
    json degrees = json::object();
    for (const auto& deg : hlc.degrees) {
        out << "  L^" << deg.k << ": rank " << deg.rank << ", surjective "
            << (deg.surjective ? "true" : "false") << ", iso "
            << (deg.isomorphism ? "true" : "false") << "\n";
        degrees[std::to_string(deg.k)] = {
            {"rank", deg.rank}, {"surjective", deg.surjective}, {"iso", deg.isomorphism}};
    }
    out << "hard Lefschetz: " << (hlc.hlc ? "true" : "false") << "\n";
    report.human = out.str();
    report.json = {{"algebra", res.algebra.name},
                   {"omega", form_str(omega)},
                   {"betti", ctx.betti_all()},
                   {"hlc", degrees},
                   {"verdict", hlc.hlc}};
    return report;
}

Report cmd_ddlambda(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Form<Rational> omega = resolve_omega(req, res);
    SymplecticOps ops(ctx, make_symplectic(res.algebra, omega));
    Report report;
    std::ostringstream out;
    json per_degree = json::object();
    bool holds = true;
    int lo = req.degree.value_or(0);
    int hi = req.degree.value_or(res.algebra.dim);
    if (lo < 0 || hi > res.algebra.dim) throw UsageError("degree out of range");
    out << res.algebra.name << "  omega = " << form_str(omega) << "\n";
    for (int k = lo; k <= hi; ++k) {
        bool ok = ops.ddlambda_lemma(k);
        holds = holds && ok;
        out << "  degree " << k << ": " << (ok ? "holds" : "fails") << "\n";
        per_degree[std::to_string(k)] = ok;
    }
    out << "dd^Lambda lemma: " << (holds ? "holds" : "fails") << "\n";
    report.human = out.str();
    report.json = {{"algebra", res.algebra.name},
                   {"omega", form_str(omega)},
                   {"per_degree", per_degree},
                   {"holds", holds}};
    return report;
}

Report cmd_audit(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Form<Rational> omega = resolve_omega(req, res);
    SymplecticOps ops(ctx, make_symplectic(res.algebra, omega));
    auto audit = ops.equivalence_audit();
    Report report;
    std::ostringstream out;
    out << res.algebra.name << "  omega = " << form_str(omega) << "\n";
    out << "  i)   hard Lefschetz:            " << (audit.hlc ? "true" : "false") << "\n";
    out << "  ii)  harmonic representatives:  " << (audit.harmonic_representatives ? "true" : "false")
        << "\n";
    out << "  iii) dd^Lambda lemma:           " << (audit.ddlambda ? "true" : "false") << "\n";
    out << "  iv)  BC -> dR injective:        " << (audit.bc_to_dr_injective ? "true" : "false")
        << "\n";
    out << "  v)   BC -> Aeppli isomorphism:  " << (audit.bc_to_aeppli_iso ? "true" : "false")
        << "\n";
    out << "consistent: " << (audit.consistent ? "true" : "false") << "\n";
    report.human = out.str();
    report.json = {{"i_hlc", audit.hlc},
                   {"ii_harmonic", audit.harmonic_representatives},
                   {"iii_ddlambda", audit.ddlambda},
                   {"iv_bc_injective", audit.bc_to_dr_injective},
                   {"v_bc_aeppli_iso", audit.bc_to_aeppli_iso},
                   {"consistent", audit.consistent}};
    return report;
}

const QMat& resolve_j(const ResolvedAlgebra& res) {
    if (res.entry && res.entry->j_coframe) return *res.entry->j_coframe;
    throw UsageError("no almost-complex structure available for '" + res.algebra.name +
                     "' (only catalog algebras with a listed J support this command)");
}

Report cmd_jinv(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Form<Rational> omega = resolve_omega(req, res);
    AlmostComplexStructure j = make_almost_complex(resolve_j(res));
    auto triple = compatibility_check(j, omega);
    if (!triple) throw MathError("J and omega are not compatible");
    auto jrep = j_invariant_cohomology(ctx, j, omega);
    auto prim = primitive_j_cohomology(ctx, j, omega);
    auto lejmi = lejmi_kernel(ctx, *triple);
    Report report;
    std::ostringstream out;
    out << res.algebra.name << "  omega = " << form_str(omega) << "\n";
    out << "  h^+_J = " << jrep.h_plus << ", h^-_J = " << jrep.h_minus << ", h^+_{J,0} = "
        << prim.dim << ", dim ker P_J = " << lejmi.kernel_dim << "\n";
    out << "  C-infinity pure and full: " << (jrep.pure_and_full ? "true" : "false") << "\n";
    out << "  H^+ basis:";
    for (const auto& b : jrep.plus_basis) out << "  " << form_str(b);
    out << "\n  H^- basis:";
    for (const auto& b : jrep.minus_basis) out << "  " << form_str(b);
    out << "\n";
    report.human = out.str();
    report.json = {{"h_plus", jrep.h_plus},
                   {"h_minus", jrep.h_minus},
                   {"h_plus_primitive", prim.dim},
                   {"ker_PJ", lejmi.kernel_dim},
                   {"pure_and_full", jrep.pure_and_full}};
    return report;
}

Report cmd_lejmi(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    Form<Rational> omega = resolve_omega(req, res);
    AlmostComplexStructure j = make_almost_complex(resolve_j(res));
    auto triple = compatibility_check(j, omega);
    if (!triple) throw MathError("J and omega are not compatible");
    auto jrep = j_invariant_cohomology(ctx, j, omega);
    auto prim = primitive_j_cohomology(ctx, j, omega);
    auto lejmi = lejmi_kernel(ctx, *triple);
    Report report;
    std::ostringstream out;
    out << res.algebra.name << "  dim ker P_J = " << lejmi.kernel_dim << "\n";
    json basis = json::array();
    for (const auto& b : lejmi.basis) {
        out << "  " << form_str(b) << "\n";
        basis.push_back(form_str(b));
    }
    report.human = out.str();
    report.json = {{"h_plus", jrep.h_plus},
                   {"h_minus", jrep.h_minus},
                   {"h_plus_primitive", prim.dim},
                   {"ker_PJ", lejmi.kernel_dim},
                   {"ker_PJ_basis", basis},
                   {"pure_and_full", jrep.pure_and_full}};
    return report;
}

Report cmd_param_hlc(const CommandRequest& req, const ResolvedAlgebra& res) {
    CohomologyContext ctx(res.algebra);
    ParametricFamily family;
    if (req.family_text) {
        family = generic_family(ctx, parse_family_spec(*req.family_text, res.algebra.dim));
    } else if (res.entry && !res.entry->family_basis.empty()) {
        family = generic_family(ctx, res.entry->family_basis);
    } else {
        family = generic_family(ctx);
    }
    ConditionPolynomial volume = volume_polynomial(family);
    HLCVerdict verdict = hlc_everywhere(ctx, family, req.seed);

    json family_json = json::object();
    {
        // report the family as coefficient forms, one per parameter
        for (size_t i = 0; i < family.params.size(); ++i) {
            Form<Rational> part(res.algebra.dim, 2);
            for (const auto& [idx, poly] : family.omega.terms) {
                for (const auto& [expo, c] : poly.terms()) {
                    if (expo[i] == 1) part.add_term(idx, c);
                }
            }
            family_json[family.params[i]] = form_str(part);
        }
    }
    json dets = json::object();
    if (!volume.poly.is_zero())
        for (const auto& det : lefschetz_determinants(ctx, family))
            dets[std::to_string(det.k)] = det.poly.str();

    json evidence = json::object();
    switch (verdict.kind) {
        case HLCVerdict::Kind::EverywhereHLC: {
            json certs = json::object();
            for (const auto& [k, cert] : verdict.certificates) {
                json c = {{"tier", cert.tier == HLCVerdict::Certificate::Tier::ProportionalEqual
                                       ? "ProportionalEqual"
                                       : "FactorwiseCompatible"}};
                if (cert.tier == HLCVerdict::Certificate::Tier::ProportionalEqual)
                    c["ratio"] = rational_str(cert.ratio);
                certs[std::to_string(k)] = c;
            }
            evidence["certificates"] = certs;
            break;
        }
        case HLCVerdict::Kind::NowhereHLC:
            evidence["zero_determinants"] = verdict.zero_determinants;
            break;
        case HLCVerdict::Kind::Mixed:
            evidence["hlc_point"] = point_json(verdict.hlc_witness);
            evidence["non_hlc_point"] = point_json(verdict.non_hlc_witness);
            break;
        case HLCVerdict::Kind::SampledConsistent:
            evidence["symplectic_samples"] = verdict.symplectic_samples;
            break;
        case HLCVerdict::Kind::Unknown:
            evidence["reason"] = verdict.reason;
            break;
    }

    Report report;
    std::ostringstream out;
    out << res.algebra.name << " parametric family over " << family.params.size()
        << " parameters\n";
    out << "  Omega = " << form_str(family.omega) << "\n";
    out << "  volume polynomial: " << volume.poly.str() << "\n";
    for (const auto& [k, det_str] : dets.items())
        out << "  det L^" << k << ": " << det_str.get<std::string>() << "\n";
    out << "verdict: " << verdict_name(verdict.kind);
    if (verdict.kind == HLCVerdict::Kind::Unknown) out << " (" << verdict.reason << ")";
    out << "\n";
    report.human = out.str();
    report.json = {{"algebra", res.algebra.name},
                   {"parameters", family.params},
                   {"family", family_json},
                   {"volume_poly", volume.poly.str()},
                   {"lefschetz_dets", dets},
                   {"verdict", verdict_name(verdict.kind)},
                   {"evidence", evidence}};
    return report;
}

}  // namespace

Report run(const CommandRequest& request) {
    if (request.command == "list") return cmd_list();
    if (request.command == "validate") return cmd_validate(request);

    ResolvedAlgebra res = resolve_algebra(request.algebra);
    if (request.command == "betti") return cmd_betti(res);
    if (request.command == "cohomology") return cmd_cohomology(request, res);
    if (request.command == "hlc") return cmd_hlc(request, res);
    if (request.command == "ddlambda") return cmd_ddlambda(request, res);
    if (request.command == "audit") return cmd_audit(request, res);
    if (request.command == "jinv") return cmd_jinv(request, res);
    if (request.command == "lejmi") return cmd_lejmi(request, res);
    if (request.command == "param-hlc") return cmd_param_hlc(request, res);
    throw UsageError("unknown command '" + request.command + "'");
}

}  // namespace lefschetz
