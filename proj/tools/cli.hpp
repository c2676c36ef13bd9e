#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "erasing/classifier.hpp"

namespace erasing::cli {

// Runs the command line; returns the process exit code (2 on parse errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

}  // namespace erasing::cli
