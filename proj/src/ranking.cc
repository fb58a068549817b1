#include "sbfl/ranking.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "sbfl/errors.h"

namespace sbfl {

std::string_view ConfigurationName(FLConfiguration config) {
  switch (config) {
    case FLConfiguration::kNormalFL:
      return "normal-fl";
    case FLConfiguration::kFileAssumption:
      return "file-assumption";
    case FLConfiguration::kMethodAssumption:
      return "method-assumption";
    case FLConfiguration::kLineAssumption:
      return "line-assumption";
  }
  return "unknown";
}

std::optional<FLConfiguration> ParseConfiguration(std::string_view name) {
  for (FLConfiguration c : kAllConfigurations) {
    if (ConfigurationName(c) == name) return c;
  }
  return std::nullopt;
}

RankedSuspiciousList Rank(const std::vector<ScoredComponent>& scored) {
  RankedSuspiciousList list;
  list.reserve(scored.size());
  for (const auto& [component, score] : scored) {
    if (!std::isfinite(score)) {
      throw UsageError("non-finite score for " + component.file_name + ":" +
                       std::to_string(component.line_number));
    }
    list.push_back({component.file_name, component.line_number, score, 0});
  }
  std::stable_sort(list.begin(), list.end(),
                   [](const SuspiciousLine& a, const SuspiciousLine& b) {
                     if (a.score != b.score) return a.score > b.score;
                     if (a.file_name != b.file_name) {
                       return a.file_name < b.file_name;
                     }
                     return a.line_number < b.line_number;
                   });
  Renumber(list);
  return list;
}

void Renumber(RankedSuspiciousList& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    list[i].rank = static_cast<int>(i) + 1;
  }
}

namespace {

bool InTruthFile(const SuspiciousLine& line, const BugPositionSet& truth) {
  return std::any_of(
      truth.positions.begin(), truth.positions.end(),
      [&](const BugPosition& p) { return p.file_name == line.file_name; });
}

bool InTruthMethod(const SuspiciousLine& line, const BugPositionSet& truth) {
  for (const BugPosition& p : truth.positions) {
    if (p.file_name != line.file_name) continue;
    for (const MethodSpan& m : p.methods) {
      if (m.Contains(line.line_number)) return true;
    }
  }
  return false;
}

}  // namespace

RankedSuspiciousList ApplyConfiguration(const RankedSuspiciousList& list,
                                        FLConfiguration config,
                                        const BugPositionSet& truth) {
  RankedSuspiciousList out;
  switch (config) {
    case FLConfiguration::kNormalFL:
      out = list;
      break;
    case FLConfiguration::kFileAssumption:
      for (const SuspiciousLine& l : list) {
        if (InTruthFile(l, truth)) out.push_back(l);
      }
      break;
    case FLConfiguration::kMethodAssumption:
      for (const SuspiciousLine& l : list) {
        if (InTruthMethod(l, truth)) out.push_back(l);
      }
      break;
    case FLConfiguration::kLineAssumption: {
      std::map<std::pair<std::string, int>, double> scores;
      for (const SuspiciousLine& l : list) {
        scores.emplace(std::make_pair(l.file_name, l.line_number), l.score);
      }
      for (const auto& location : truth.Locations()) {
        const auto& [file, line] = location;
        auto it = scores.find(location);
        out.push_back({file, line, it == scores.end() ? 0.0 : it->second, 0});
      }
      break;
    }
  }
  Renumber(out);
  return out;
}

}  // namespace sbfl
