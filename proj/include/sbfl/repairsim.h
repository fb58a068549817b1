#ifndef SBFL_REPAIRSIM_H_
#define SBFL_REPAIRSIM_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbfl/bug_position.h"
#include "sbfl/ranking.h"

namespace sbfl {

// What patch generation and validation yield at one location.
enum class LocationOutcome {
  kNoPatch,
  kPlausibleOnly,   // passes all tests but is not the developer fix
  kCorrectPatch,    // correct edit; completes a single-location bug
  kPartialCorrect,  // correct edit at one location of a multi-location bug
};

// "no-patch", "plausible-only", "correct", "partial-correct".
std::string_view LocationOutcomeName(LocationOutcome outcome);
std::optional<LocationOutcome> ParseLocationOutcome(std::string_view name);

using Location = std::pair<std::string, int>;

struct RepairScenario {
  std::string bug_id;
  BugPositionSet truth;
  RankedSuspiciousList ranked_list;
  std::map<Location, LocationOutcome> oracle;  // absent = kNoPatch
  int budget = 1;                              // maximum location trials
  FLConfiguration config = FLConfiguration::kNormalFL;
  bool joint_edit = true;  // only honoured under LineAssumption

  LocationOutcome OutcomeAt(const Location& location) const;
};

enum class Verdict { kNone, kPlausible, kCorrect };

// "none", "plausible", "correct".
std::string_view VerdictName(Verdict verdict);

struct RepairOutcome {
  Verdict verdict = Verdict::kNone;
  int trials_used = 0;
  std::optional<Location> stopped_on;

  friend bool operator==(const RepairOutcome&, const RepairOutcome&) = default;
};

// Throws UsageError if the scenario breaks a model assumption: negative
// budget, invalid truth, or a correct-patch oracle entry off the truth.
void Validate(const RepairScenario& scenario);

// Walks the configured suspicious list one location per trial and stops at
// the first plausible patch. A bug with several ground-truth lines cannot be
// fixed by a single edit; under LineAssumption with joint editing the
// correct edits found so far are combined, and the bug counts as fixed once
// every ground-truth line has one.
RepairOutcome Simulate(const RepairScenario& scenario);

// Runs Simulate once per configuration on otherwise identical scenarios.
std::map<FLConfiguration, RepairOutcome> SweepConfigurations(
    const RepairScenario& base, const std::vector<FLConfiguration>& configs);

}  // namespace sbfl

#endif  // SBFL_REPAIRSIM_H_
