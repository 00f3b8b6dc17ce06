#pragma once

#include "corrkit/gen.hpp"
#include "corrkit/json_io.hpp"

namespace corrkit {

struct CaseFailure {
  int index = 0;
  std::string detail;
  Json counterexample;  // shrunk where the suite supports it
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  int passes = 0;
  std::vector<CaseFailure> failures;
  bool ok() const { return passes == cases && cases > 0; }
};

const std::vector<std::string>& suite_names();

// Runs `cases` seeded instances of the named suite; throws
// std::invalid_argument on unknown suite names.
SuiteReport run_suite(const std::string& suite, int cases, const GenConfig& cfg);

Json report_to_json(const SuiteReport& rep);

}  // namespace corrkit
