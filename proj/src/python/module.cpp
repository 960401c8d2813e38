#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lefschetz/commands.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/liealgebra.hpp"

namespace py = pybind11;
using namespace lefschetz;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
            return out;
        }
        default: return py::none();
    }
}

py::object run_command(const std::string& command, const std::string& algebra,
                       const std::optional<std::string>& omega,
                       const std::optional<int>& degree,
                       const std::optional<std::string>& family,
                       std::optional<unsigned long long> seed) {
    CommandRequest request;
    request.command = command;
    request.algebra = algebra;
    request.omega_text = omega;
    request.degree = degree;
    request.family_text = family;
    if (seed) request.seed = *seed;
    return to_py(run(request).json);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symplectic cohomology of solvmanifolds presented as Lie algebras";

    py::register_exception<UsageError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

    m.def("catalog", [] {
        py::list out;
        for (const auto& name : catalog_names()) out.append(name);
        return out;
    }, "names of the builtin algebras");

    m.def("catalog_info",
          [] { return run_command("list", "", std::nullopt, std::nullopt, std::nullopt,
                                  std::nullopt); },
          "catalog entries with dimensions and preferred symplectic forms");

    m.def("validate",
          [](const std::string& algebra) {
              return run_command("validate", algebra, std::nullopt, std::nullopt, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), "Jacobi and unimodularity diagnostics");

    m.def("betti",
          [](const std::string& algebra) {
              py::object report = run_command("betti", algebra, std::nullopt, std::nullopt,
                                              std::nullopt, std::nullopt);
              return report["betti"];
          },
          py::arg("algebra"), "Betti numbers of the invariant cohomology");

    m.def("cohomology",
          [](const std::string& algebra, std::optional<int> degree) {
              return run_command("cohomology", algebra, std::nullopt, degree, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), py::arg("degree") = std::nullopt,
          "cohomology bases per degree");

    m.def("hlc",
          [](const std::string& algebra, std::optional<std::string> omega) {
              return run_command("hlc", algebra, omega, std::nullopt, std::nullopt, std::nullopt);
          },
          py::arg("algebra"), py::arg("omega") = std::nullopt,
          "hard Lefschetz report for one symplectic form");

    m.def("ddlambda",
          [](const std::string& algebra, std::optional<std::string> omega) {
              return run_command("ddlambda", algebra, omega, std::nullopt, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), py::arg("omega") = std::nullopt,
          "dd^Lambda lemma per degree");

    m.def("audit",
          [](const std::string& algebra, std::optional<std::string> omega) {
              return run_command("audit", algebra, omega, std::nullopt, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), py::arg("omega") = std::nullopt,
          "five-way equivalence audit");

    m.def("jinv",
          [](const std::string& algebra, std::optional<std::string> omega) {
              return run_command("jinv", algebra, omega, std::nullopt, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), py::arg("omega") = std::nullopt,
          "J-invariant cohomology, primitive classes and ker P_J");

    m.def("lejmi",
          [](const std::string& algebra) {
              return run_command("lejmi", algebra, std::nullopt, std::nullopt, std::nullopt,
                                 std::nullopt);
          },
          py::arg("algebra"), "kernel of the Lejmi operator");

    m.def("param_hlc",
          [](const std::string& algebra, std::optional<std::string> family,
             std::optional<unsigned long long> seed) {
              return run_command("param-hlc", algebra, std::nullopt, std::nullopt, family, seed);
          },
          py::arg("algebra"), py::arg("family") = std::nullopt, py::arg("seed") = std::nullopt,
          "polynomial HLC certificate for a parametric family");

    m.def("algebra_json",
          [](const std::string& name) { return algebra_to_json(catalog_get(name)); },
          py::arg("name"), "catalog algebra as portable JSON");
}
