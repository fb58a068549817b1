#include "sbfl/locality.h"

#include <algorithm>

namespace sbfl {

std::string_view GranularityName(Granularity granularity) {
  switch (granularity) {
    case Granularity::kFile:
      return "file";
    case Granularity::kMethod:
      return "method";
    case Granularity::kLine:
      return "line";
  }
  return "unknown";
}

std::optional<Granularity> ParseGranularity(std::string_view name) {
  for (Granularity g : kAllGranularities) {
    if (GranularityName(g) == name) return g;
  }
  return std::nullopt;
}

bool Matches(const SuspiciousLine& line, const BugPositionSet& truth,
             Granularity granularity) {
  for (const BugPosition& pos : truth.positions) {
    if (pos.file_name != line.file_name) continue;
    switch (granularity) {
      case Granularity::kFile:
        return true;
      case Granularity::kMethod:
        if (std::any_of(pos.methods.begin(), pos.methods.end(),
                        [&](const MethodSpan& m) {
                          return m.Contains(line.line_number);
                        })) {
          return true;
        }
        break;
      case Granularity::kLine:
        if (std::find(pos.lines.begin(), pos.lines.end(), line.line_number) !=
            pos.lines.end()) {
          return true;
        }
        break;
    }
  }
  return false;
}

int FirstMatchPosition(const RankedSuspiciousList& list,
                       const BugPositionSet& truth, Granularity granularity) {
  for (const SuspiciousLine& line : list) {
    if (Matches(line, truth, granularity)) return line.rank;
  }
  return 0;
}

LocalizationResult Localize(const RankedSuspiciousList& list,
                            const BugPositionSet& truth,
                            Granularity granularity, RankingMetric metric) {
  return {truth.bug_id, metric, granularity,
          FirstMatchPosition(list, truth, granularity)};
}

}  // namespace sbfl
