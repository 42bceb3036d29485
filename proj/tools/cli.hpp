#pragma once

#include "gradedk/abelian_group.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace gradedk::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Machine-format encoding of a group and its inverse.
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

}  // namespace gradedk::cli
