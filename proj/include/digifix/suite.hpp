#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digifix/io.hpp"

namespace digifix {

struct Assertion {
  std::string name;
  json expected;
  json actual;
  std::string provenance;  // "reported", "derived" or "trivial"
  bool pass = false;
};

enum class ScenarioStatus { Pass, Fail, Inconclusive };

struct ScenarioOutcome {
  std::string id;
  std::string title;
  ScenarioStatus status = ScenarioStatus::Fail;
  std::vector<Assertion> assertions;
  json caps = json::object();

  bool pass() const { return status == ScenarioStatus::Pass; }
};

struct SuiteOptions {
  std::vector<std::string> only;      // empty runs everything
  std::optional<std::uint64_t> seed;  // enables the sampled spot checks in S5
};

const std::vector<std::string>& scenario_ids();

// Throws InputError on an unknown id.
ScenarioOutcome run_scenario(const std::string& id, const SuiteOptions& options = {});
std::vector<ScenarioOutcome> run_paper_suite(const SuiteOptions& options = {});

json to_json(const ScenarioOutcome& outcome);
std::string status_name(ScenarioStatus status);

}  // namespace digifix
