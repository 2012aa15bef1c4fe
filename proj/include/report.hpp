#pragma once

// Input loading (root lists or annotated pictures, JSON) and the full
// analysis report consumed by the command-line tool.

#include "padic.hpp"
#include "parse.hpp"

#include "json.hpp"

namespace hyc {

using Json = nlohmann::ordered_json;

// carries the CLI exit code: 1 for malformed input, 2 for semantic failures
struct AnalysisError : std::runtime_error {
  int exit_code;
  AnalysisError(int code, const std::string& what)
      : std::runtime_error(what), exit_code(code) {}
};

struct AnalysisInput {
  ClusterPicture picture;
  GaloisData galois;
};

// accepts {"prime", "leading_coefficient", "roots": [{"rat"}|{"surd"}]} or
// {"picture", "leading_valuation", "prime", "frobenius", "inertia", "epsilon"}
AnalysisInput load_input(const std::string& text);

// full invariant report; strict rejects inputs whose tameness is only attested
Json analyze_report(const AnalysisInput& in, bool strict = false);

std::string render_text(const Json& report, int indent = 0);

Json error_object(const AnalysisError& e);

}  // namespace hyc
