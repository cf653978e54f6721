#pragma once

#include "wakimoto/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wakimoto {

/// Everything reported for one parameter point.
struct RunDocument {
  LieParams params;
  std::string suite;
  std::vector<CheckReport> checks;
  std::vector<std::string> warnings;
};

nlohmann::ordered_json params_json(const LieParams& p);
nlohmann::ordered_json check_json(const CheckReport& r);

/// {params, suite, checks, warnings, version}
nlohmann::ordered_json document_json(const RunDocument& doc);

/// A single document, or {"runs": [...], "version"} when grid is set.
std::string render_json(const std::vector<RunDocument>& docs, bool grid);
std::string render_text(const std::vector<RunDocument>& docs);

const char* version();

}  // namespace wakimoto
