#include "sbfl/repairsim.h"

#include <set>

#include "sbfl/errors.h"

namespace sbfl {

std::string_view LocationOutcomeName(LocationOutcome outcome) {
  switch (outcome) {
    case LocationOutcome::kNoPatch:
      return "no-patch";
    case LocationOutcome::kPlausibleOnly:
      return "plausible-only";
    case LocationOutcome::kCorrectPatch:
      return "correct";
    case LocationOutcome::kPartialCorrect:
      return "partial-correct";
  }
  return "unknown";
}

std::optional<LocationOutcome> ParseLocationOutcome(std::string_view name) {
  for (LocationOutcome o :
       {LocationOutcome::kNoPatch, LocationOutcome::kPlausibleOnly,
        LocationOutcome::kCorrectPatch, LocationOutcome::kPartialCorrect}) {
    if (LocationOutcomeName(o) == name) return o;
  }
  return std::nullopt;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kNone:
      return "none";
    case Verdict::kPlausible:
      return "plausible";
    case Verdict::kCorrect:
      return "correct";
  }
  return "unknown";
}

LocationOutcome RepairScenario::OutcomeAt(const Location& location) const {
  auto it = oracle.find(location);
  return it == oracle.end() ? LocationOutcome::kNoPatch : it->second;
}

void Validate(const RepairScenario& scenario) {
  if (scenario.budget < 0) {
    throw UsageError("scenario " + scenario.bug_id + " has a negative budget");
  }
  Validate(scenario.truth);
  const auto locations = scenario.truth.Locations();
  const std::set<Location> truth(locations.begin(), locations.end());
  for (const auto& [location, outcome] : scenario.oracle) {
    if (outcome == LocationOutcome::kCorrectPatch &&
        !truth.contains(location)) {
      throw UsageError("scenario " + scenario.bug_id +
                       " has a correct patch off the ground truth at " +
                       location.first + ":" + std::to_string(location.second));
    }
  }
}

RepairOutcome Simulate(const RepairScenario& scenario) {
  const RankedSuspiciousList candidates =
      ApplyConfiguration(scenario.ranked_list, scenario.config, scenario.truth);
  const auto locations = scenario.truth.Locations();
  const std::set<Location> truth(locations.begin(), locations.end());
  const bool single_location = truth.size() == 1;
  const bool joint = scenario.joint_edit &&
                     scenario.config == FLConfiguration::kLineAssumption;

  std::set<Location> edited;
  RepairOutcome outcome;
  for (const SuspiciousLine& line : candidates) {
    if (outcome.trials_used >= scenario.budget) break;
    ++outcome.trials_used;
    Location here{line.file_name, line.line_number};
    switch (scenario.OutcomeAt(here)) {
      case LocationOutcome::kNoPatch:
        break;
      case LocationOutcome::kPlausibleOnly:
        outcome.verdict = Verdict::kPlausible;
        outcome.stopped_on = std::move(here);
        return outcome;
      case LocationOutcome::kCorrectPatch:
        if (single_location) {
          outcome.verdict = Verdict::kCorrect;
          outcome.stopped_on = std::move(here);
          return outcome;
        }
        [[fallthrough]];
      case LocationOutcome::kPartialCorrect:
        // Alone this edit leaves failing tests, so it is not even plausible.
        if (joint && truth.contains(here)) {
          edited.insert(here);
          if (edited.size() == truth.size()) {
            outcome.verdict = Verdict::kCorrect;
            outcome.stopped_on = std::move(here);
            return outcome;
          }
        }
        break;
    }
  }
  return outcome;
}

std::map<FLConfiguration, RepairOutcome> SweepConfigurations(
    const RepairScenario& base, const std::vector<FLConfiguration>& configs) {
  std::map<FLConfiguration, RepairOutcome> out;
  RepairScenario scenario = base;
  for (FLConfiguration config : configs) {
    scenario.config = config;
    out[config] = Simulate(scenario);
  }
  return out;
}

}  // namespace sbfl
