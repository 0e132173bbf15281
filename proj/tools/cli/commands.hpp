#pragma once

#include "cli/document.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace koszul::cli {

struct Check {
  std::string identity;
  bool pass = false;
  std::string witness;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 mathematical check failed, 2 input error
  std::vector<Check> checks;
  nlohmann::json payload;  // command-specific result data
};

extern const std::vector<std::string> kCommands;

/// Executes one command against a parsed document. DocumentError and
/// std::invalid_argument surface as exit code 2; CheckError and failed
/// checks as exit code 1.
RunResult run_command(const std::string& command, const Document& doc, const Params& params);

/// The machine-readable certificate: the document fields echoed at top
/// level plus command, params, checks and result. Feeding it back to the
/// same command verifies again.
nlohmann::json certificate_json(const std::string& command, const nlohmann::json& document,
                                const Params& params, const RunResult& result);

std::string human_report(const std::string& command, const RunResult& result);

}  // namespace koszul::cli
