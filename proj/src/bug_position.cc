#include "sbfl/bug_position.h"

#include <algorithm>
#include <set>
#include <string>

#include "sbfl/errors.h"

namespace sbfl {

std::vector<std::pair<std::string, int>> BugPositionSet::Locations() const {
  std::vector<std::pair<std::string, int>> out;
  std::set<std::pair<std::string, int>> seen;
  for (const BugPosition& pos : positions) {
    for (int line : pos.lines) {
      if (seen.emplace(pos.file_name, line).second) {
        out.emplace_back(pos.file_name, line);
      }
    }
  }
  return out;
}

bool BugPositionSet::AllLinesInsideMethods() const {
  for (const BugPosition& pos : positions) {
    if (pos.methods.empty()) return false;
    for (int line : pos.lines) {
      const bool inside =
          std::any_of(pos.methods.begin(), pos.methods.end(),
                      [line](const MethodSpan& m) { return m.Contains(line); });
      if (!inside) return false;
    }
  }
  return true;
}

void Validate(const BugPositionSet& truth) {
  if (truth.positions.empty()) {
    throw UsageError("bug " + truth.bug_id + " has no positions");
  }
  for (const BugPosition& pos : truth.positions) {
    if (pos.file_name.empty()) {
      throw UsageError("bug " + truth.bug_id + " has a position without file");
    }
    if (pos.lines.empty()) {
      throw UsageError("bug " + truth.bug_id + " position " + pos.file_name +
                       " has no lines");
    }
    for (int line : pos.lines) {
      if (line <= 0) {
        throw UsageError("bug " + truth.bug_id + " has non-positive line");
      }
    }
    for (const MethodSpan& m : pos.methods) {
      if (m.start_line <= 0 || m.end_line < m.start_line) {
        throw UsageError("bug " + truth.bug_id + " method " + m.name +
                         " has an invalid span");
      }
    }
  }
}

}  // namespace sbfl
