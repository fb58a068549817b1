#ifndef SBFL_LOCALITY_H_
#define SBFL_LOCALITY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sbfl/bug_position.h"
#include "sbfl/ranking.h"
#include "sbfl/spectra.h"

namespace sbfl {

enum class Granularity { kFile, kMethod, kLine };

inline constexpr std::array<Granularity, 3> kAllGranularities = {
    Granularity::kFile, Granularity::kMethod, Granularity::kLine};

// "file", "method", "line".
std::string_view GranularityName(Granularity granularity);
std::optional<Granularity> ParseGranularity(std::string_view name);

struct LocalizationResult {
  std::string bug_id;
  RankingMetric metric = RankingMetric::kOchiai;
  Granularity granularity = Granularity::kLine;
  int position = 0;  // rank of the first matching line; 0 = not localized

  friend bool operator==(const LocalizationResult&,
                         const LocalizationResult&) = default;
};

// Whether a reported line hits the ground truth at `granularity`:
//   File    same file as some position
//   Method  same file and inside one of that position's method spans
//   Line    exactly one of that position's lines
// A position without methods never matches at Method granularity.
bool Matches(const SuspiciousLine& line, const BugPositionSet& truth,
             Granularity granularity);

// Rank of the first matching line of `list`, or 0.
int FirstMatchPosition(const RankedSuspiciousList& list,
                       const BugPositionSet& truth, Granularity granularity);

LocalizationResult Localize(const RankedSuspiciousList& list,
                            const BugPositionSet& truth,
                            Granularity granularity, RankingMetric metric);

}  // namespace sbfl

#endif  // SBFL_LOCALITY_H_
