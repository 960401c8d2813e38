#ifndef LEFSCHETZ_COMMANDS_HPP
#define LEFSCHETZ_COMMANDS_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "lefschetz/parametric.hpp"

namespace lefschetz {

struct CommandRequest {
    std::string command;  // list | betti | cohomology | hlc | ddlambda | audit |
                          // jinv | lejmi | param-hlc | validate
    std::string algebra;  // catalog name or JSON file path
    std::optional<std::string> omega_text;
    std::optional<int> degree;
    std::optional<std::string> family_text;  // "name:expr;name:expr"
    bool json = false;
    unsigned long long seed = kDefaultSeed;
};

struct Report {
    std::string human;
    nlohmann::json json;
    // exit code embedded in the result rather than thrown: 0 success,
    // 1 mathematical failure surfaced as a structured report
    int status = 0;

    std::string rendered(bool as_json) const {
        return as_json ? json.dump(2) + "\n" : human;
    }
};

Report run(const CommandRequest& request);

}  // namespace lefschetz

#endif
