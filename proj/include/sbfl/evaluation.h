#ifndef SBFL_EVALUATION_H_
#define SBFL_EVALUATION_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbfl/locality.h"

namespace sbfl {

enum class ToolOutcome { kCorrect, kPlausible, kNone };

// "correct", "plausible", "none".
std::string_view ToolOutcomeName(ToolOutcome outcome);
std::optional<ToolOutcome> ParseToolOutcome(std::string_view name);

// What one repair tool achieved on one bug. A correct fix is also plausible.
struct ToolResult {
  std::string tool;
  std::string bug_id;
  ToolOutcome outcome = ToolOutcome::kNone;

  friend bool operator==(const ToolResult&, const ToolResult&) = default;
};

enum class BugClass { kCorrectlyFixed, kOverfittingFixed, kUnfixed };

inline constexpr std::array<BugClass, 3> kAllBugClasses = {
    BugClass::kCorrectlyFixed, BugClass::kOverfittingFixed,
    BugClass::kUnfixed};

// "correctly-fixed", "overfitting-fixed", "unfixed".
std::string_view BugClassName(BugClass cls);

// 0 for an unlocalized bug (position 0), otherwise 1 / position.
// Throws UsageError for negative positions.
double ReciprocalPosition(int position);

// Number of results with 1 <= position <= k; `k` unset means no cutoff.
// Throws UsageError if k is set and not positive.
int TopK(const std::vector<LocalizationResult>& results,
         std::optional<int> k);

// CorrectlyFixed if any tool fixed the bug correctly, else OverfittingFixed
// if any produced a plausible patch, else Unfixed. Throws InputError when a
// result names a bug outside `all_bugs`.
std::map<std::string, BugClass> Classify(
    const std::set<std::string>& all_bugs,
    const std::vector<ToolResult>& results);

// Exact percentage 100 * numerator / denominator (0 when denominator is 0).
struct Percentage {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;

  double value() const;
  // Rounded half-up to `decimals` places using integer arithmetic, so that
  // e.g. 80.645 (25/31) prints as "80.6" and 4.5454... as "4.55".
  std::string Format(int decimals) const;
  // Exact three-way comparison of the underlying ratios.
  friend int Compare(const Percentage& a, const Percentage& b);
};

struct ComparisonRow {
  std::string tool;
  int npfb = 0;  // plausibly-fixed bugs (correct ones included)
  int ncfb = 0;  // correctly-fixed bugs
  int rank = 0;  // 1-based rank by P3C, descending

  Percentage p3c() const { return {ncfb, npfb}; }
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // first-appearance tool order
  int decimals = 2;                 // printed P3C precision

  std::string P3CText(const ComparisonRow& row) const {
    return row.p3c().Format(decimals);
  }
};

// Tallies NPFB/NCFB/P3C per tool. When `localizable` is given only bugs in
// it count, and the table prints one decimal; otherwise two decimals.
// Ranks are by exact P3C descending, ties by tool name ascending.
ComparisonTable BuildComparisonTable(
    const std::vector<ToolResult>& results,
    const std::optional<std::set<std::string>>& localizable);

enum class RankMove { kUp, kDown, kSame };

// "↑", "↓" or "=".
std::string_view RankMoveSymbol(RankMove move);

struct RankShift {
  std::string tool;
  ComparisonRow all;
  ComparisonRow localizable;
  RankMove move = RankMove::kSame;
};

// Pairs the all-bugs and localizable-only rankings per tool, ordered by the
// all-bugs rank. Throws InputError if the tables cover different tools.
std::vector<RankShift> CompareRankings(const ComparisonTable& all,
                                       const ComparisonTable& localizable);

struct FiveNumberSummary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Linear-interpolation quantiles; nullopt for an empty sample.
std::optional<FiveNumberSummary> Summarize(std::vector<double> values);

struct ClassDistribution {
  BugClass bug_class = BugClass::kUnfixed;
  std::vector<std::pair<std::string, double>> values;  // (bug id, 1/pos)
  std::optional<FiveNumberSummary> summary;
};

// Reciprocal positions grouped by bug class, each group sorted by bug id.
// Throws InputError unless both maps have the same keys.
std::array<ClassDistribution, 3> DistributionByClass(
    const std::map<std::string, int>& positions,
    const std::map<std::string, BugClass>& classes);

}  // namespace sbfl

#endif  // SBFL_EVALUATION_H_
