#include "sbfl/evaluation.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sbfl/errors.h"

namespace sbfl {

std::string_view ToolOutcomeName(ToolOutcome outcome) {
  switch (outcome) {
    case ToolOutcome::kCorrect:
      return "correct";
    case ToolOutcome::kPlausible:
      return "plausible";
    case ToolOutcome::kNone:
      return "none";
  }
  return "unknown";
}

std::optional<ToolOutcome> ParseToolOutcome(std::string_view name) {
  for (ToolOutcome o :
       {ToolOutcome::kCorrect, ToolOutcome::kPlausible, ToolOutcome::kNone}) {
    if (ToolOutcomeName(o) == name) return o;
  }
  return std::nullopt;
}

std::string_view BugClassName(BugClass cls) {
  switch (cls) {
    case BugClass::kCorrectlyFixed:
      return "correctly-fixed";
    case BugClass::kOverfittingFixed:
      return "overfitting-fixed";
    case BugClass::kUnfixed:
      return "unfixed";
  }
  return "unknown";
}

double ReciprocalPosition(int position) {
  if (position < 0) {
    throw UsageError("negative bug position " + std::to_string(position));
  }
  if (position == 0) return 0.0;
  return 1.0 / position;
}

int TopK(const std::vector<LocalizationResult>& results,
         std::optional<int> k) {
  if (k && *k <= 0) throw UsageError("k must be positive");
  return static_cast<int>(
      std::count_if(results.begin(), results.end(),
                    [&](const LocalizationResult& r) {
                      return r.position >= 1 && (!k || r.position <= *k);
                    }));
}

std::map<std::string, BugClass> Classify(
    const std::set<std::string>& all_bugs,
    const std::vector<ToolResult>& results) {
  std::map<std::string, BugClass> classes;
  for (const std::string& bug : all_bugs) classes[bug] = BugClass::kUnfixed;
  for (const ToolResult& r : results) {
    auto it = classes.find(r.bug_id);
    if (it == classes.end()) {
      throw InputError("tool result of " + r.tool + " names unknown bug " +
                       r.bug_id);
    }
    if (r.outcome == ToolOutcome::kCorrect) {
      it->second = BugClass::kCorrectlyFixed;
    } else if (r.outcome == ToolOutcome::kPlausible &&
               it->second == BugClass::kUnfixed) {
      it->second = BugClass::kOverfittingFixed;
    }
  }
  return classes;
}

double Percentage::value() const {
  if (denominator == 0) return 0.0;
  return 100.0 * static_cast<double>(numerator) /
         static_cast<double>(denominator);
}

std::string Percentage::Format(int decimals) const {
  if (decimals < 0) throw UsageError("negative precision");
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::int64_t scaled = 0;
  if (denominator != 0) {
    const std::int64_t num = 100 * scale * numerator;
    scaled = num / denominator;
    if (2 * (num % denominator) >= denominator) ++scaled;
  }
  std::string out = std::to_string(scaled / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += "." + std::string(decimals - frac.size(), '0') + frac;
  }
  return out;
}

int Compare(const Percentage& a, const Percentage& b) {
  // A zero denominator stands for 0%.
  const std::int64_t an = a.denominator == 0 ? 0 : a.numerator;
  const std::int64_t ad = a.denominator == 0 ? 1 : a.denominator;
  const std::int64_t bn = b.denominator == 0 ? 0 : b.numerator;
  const std::int64_t bd = b.denominator == 0 ? 1 : b.denominator;
  const std::int64_t lhs = an * bd;
  const std::int64_t rhs = bn * ad;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

ComparisonTable BuildComparisonTable(
    const std::vector<ToolResult>& results,
    const std::optional<std::set<std::string>>& localizable) {
  ComparisonTable table;
  table.decimals = localizable ? 1 : 2;

  std::map<std::string, std::size_t> row_of;
  std::set<std::pair<std::string, std::string>> seen;
  for (const ToolResult& r : results) {
    if (!seen.emplace(r.tool, r.bug_id).second) {
      throw InputError("duplicate tool result " + r.tool + "," + r.bug_id);
    }
    auto [it, inserted] = row_of.emplace(r.tool, table.rows.size());
    if (inserted) table.rows.push_back({r.tool, 0, 0, 0});
    if (localizable && !localizable->contains(r.bug_id)) continue;
    ComparisonRow& row = table.rows[it->second];
    if (r.outcome != ToolOutcome::kNone) ++row.npfb;
    if (r.outcome == ToolOutcome::kCorrect) ++row.ncfb;
  }

  std::vector<std::size_t> order(table.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int c = Compare(table.rows[a].p3c(), table.rows[b].p3c());
    if (c != 0) return c > 0;
    return table.rows[a].tool < table.rows[b].tool;
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    table.rows[order[r]].rank = static_cast<int>(r) + 1;
  }
  return table;
}

std::string_view RankMoveSymbol(RankMove move) {
  switch (move) {
    case RankMove::kUp:
      return "↑";
    case RankMove::kDown:
      return "↓";
    case RankMove::kSame:
      return "=";
  }
  return "?";
}

std::vector<RankShift> CompareRankings(const ComparisonTable& all,
                                       const ComparisonTable& localizable) {
  std::map<std::string, const ComparisonRow*> by_tool;
  for (const ComparisonRow& row : localizable.rows) by_tool[row.tool] = &row;
  if (by_tool.size() != all.rows.size()) {
    throw InputError("ranking tables cover different tool sets");
  }
  std::vector<RankShift> shifts;
  for (const ComparisonRow& row : all.rows) {
    auto it = by_tool.find(row.tool);
    if (it == by_tool.end()) {
      throw InputError("tool " + row.tool + " missing from localizable table");
    }
    RankShift shift{row.tool, row, *it->second, RankMove::kSame};
    if (shift.localizable.rank < row.rank) shift.move = RankMove::kUp;
    if (shift.localizable.rank > row.rank) shift.move = RankMove::kDown;
    shifts.push_back(std::move(shift));
  }
  std::sort(shifts.begin(), shifts.end(),
            [](const RankShift& a, const RankShift& b) {
              return a.all.rank < b.all.rank;
            });
  return shifts;
}

namespace {

double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::optional<FiveNumberSummary> Summarize(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  return FiveNumberSummary{values.front(), Quantile(values, 0.25),
                           Quantile(values, 0.5), Quantile(values, 0.75),
                           values.back()};
}

std::array<ClassDistribution, 3> DistributionByClass(
    const std::map<std::string, int>& positions,
    const std::map<std::string, BugClass>& classes) {
  if (positions.size() != classes.size()) {
    throw InputError("positions and classes cover different bug sets");
  }
  std::array<ClassDistribution, 3> out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].bug_class = kAllBugClasses[i];
  }
  for (const auto& [bug, position] : positions) {
    auto it = classes.find(bug);
    if (it == classes.end()) {
      throw InputError("bug " + bug + " has a position but no class");
    }
    out[static_cast<std::size_t>(it->second)].values.emplace_back(
        bug, ReciprocalPosition(position));
  }
  for (ClassDistribution& d : out) {
    std::vector<double> raw;
    raw.reserve(d.values.size());
    for (const auto& v : d.values) raw.push_back(v.second);
    d.summary = Summarize(std::move(raw));
  }
  return out;
}

}  // namespace sbfl
