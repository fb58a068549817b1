#ifndef SBFL_RANKING_H_
#define SBFL_RANKING_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbfl/bug_position.h"
#include "sbfl/spectra.h"

namespace sbfl {

struct SuspiciousLine {
  std::string file_name;
  int line_number = 0;
  double score = 0.0;
  int rank = 0;  // 1-based position in the list

  friend bool operator==(const SuspiciousLine&,
                         const SuspiciousLine&) = default;
};

// Ordered suspicious lines; `rank` of entry i is always i + 1.
using RankedSuspiciousList = std::vector<SuspiciousLine>;

// How much ground-truth location knowledge the repair pipeline is given.
enum class FLConfiguration {
  kNormalFL,
  kFileAssumption,
  kMethodAssumption,
  kLineAssumption,
};

inline constexpr std::array<FLConfiguration, 4> kAllConfigurations = {
    FLConfiguration::kNormalFL, FLConfiguration::kFileAssumption,
    FLConfiguration::kMethodAssumption, FLConfiguration::kLineAssumption};

// "normal-fl", "file-assumption", "method-assumption", "line-assumption".
std::string_view ConfigurationName(FLConfiguration config);
std::optional<FLConfiguration> ParseConfiguration(std::string_view name);

// Orders by descending score, then ascending (file name, line number).
// Throws UsageError on a non-finite score.
RankedSuspiciousList Rank(const std::vector<ScoredComponent>& scored);

// Reassigns ranks 1..n in list order.
void Renumber(RankedSuspiciousList& list);

// Filters `list` according to `config`:
//   NormalFL          the list unchanged
//   FileAssumption    lines in a ground-truth file
//   MethodAssumption  lines inside a ground-truth method span of their file
//   LineAssumption    exactly the ground-truth lines, in ground-truth order;
//                     the fault localization ranking is bypassed
// Survivors keep their relative order and are renumbered from 1.
RankedSuspiciousList ApplyConfiguration(const RankedSuspiciousList& list,
                                        FLConfiguration config,
                                        const BugPositionSet& truth);

}  // namespace sbfl

#endif  // SBFL_RANKING_H_
