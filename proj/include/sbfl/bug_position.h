#ifndef SBFL_BUG_POSITION_H_
#define SBFL_BUG_POSITION_H_

#include <string>
#include <utility>
#include <vector>

#include "sbfl/spectra.h"

namespace sbfl {

// Ground-truth location of a bug inside one file. `methods` is empty when
// the faulty code is not inside any method (e.g. a field declaration).
// Method spans need not cover every entry of `lines`.
struct BugPosition {
  std::string file_name;
  std::vector<MethodSpan> methods;
  std::vector<int> lines;

  friend bool operator==(const BugPosition&, const BugPosition&) = default;
};

struct BugPositionSet {
  std::string bug_id;
  std::vector<BugPosition> positions;  // never empty once validated

  // All (file, line) ground-truth pairs in declaration order, deduplicated.
  std::vector<std::pair<std::string, int>> Locations() const;

  // True when every position declares methods and every ground-truth line
  // lies inside a declared span of its own position.
  bool AllLinesInsideMethods() const;

  friend bool operator==(const BugPositionSet&,
                         const BugPositionSet&) = default;
};

// Throws UsageError if the set is empty or a position is malformed (no
// lines, non-positive line, inverted span).
void Validate(const BugPositionSet& truth);

}  // namespace sbfl

#endif  // SBFL_BUG_POSITION_H_
