#pragma once

// Command layer of the mirrorspec CLI, kept apart from main() so the tests
// can drive it with an argument vector and capture both streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mirror/quadrature.hpp"

namespace mirror::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunRecord {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  QuadratureConfig quadrature;
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

void to_json(nlohmann::json& j, const RunRecord& r);
void from_json(const nlohmann::json& j, RunRecord& r);

/// Default quadrature settings, with rel_tol taken from MIRRORSPEC_TOL when
/// that variable holds a positive number.
QuadratureConfig default_quadrature();

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mirror::cli
