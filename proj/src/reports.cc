#include "sbfl/reports.h"

#include <charconv>
#include <cmath>

namespace sbfl {

std::string FormatScore(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, ptr);
  if (std::isfinite(value) &&
      out.find_first_of(".e") == std::string::npos) {
    out += ".0";
  }
  return out;
}

std::string RankedListTsv(const RankedSuspiciousList& list) {
  std::string out = "rIdx\tfileName\tlineNumber\tscore\n";
  for (const SuspiciousLine& l : list) {
    out += std::to_string(l.rank) + "\t" + l.file_name + "\t" +
           std::to_string(l.line_number) + "\t" + FormatScore(l.score) + "\n";
  }
  return out;
}

std::string TopKTsv(
    const std::map<std::pair<RankingMetric, Granularity>,
                   std::vector<LocalizationResult>>& results,
    const TopKCutoffs& cutoffs) {
  std::string out = "metric\tgranularity";
  for (const auto& k : cutoffs) {
    out += k ? "\ttop-" + std::to_string(*k) : std::string("\tall");
  }
  out += "\n";
  for (const auto& [key, rows] : results) {
    out += std::string(MetricName(key.first)) + "\t" +
           std::string(GranularityName(key.second));
    for (const auto& k : cutoffs) out += "\t" + std::to_string(TopK(rows, k));
    out += "\n";
  }
  return out;
}

std::string PositionsTsv(const std::vector<LocalizationResult>& results) {
  std::string out =
      "bugId\tmetric\tgranularity\tposition\treciprocalPosition\n";
  for (const LocalizationResult& r : results) {
    out += r.bug_id + "\t" + std::string(MetricName(r.metric)) + "\t" +
           std::string(GranularityName(r.granularity)) + "\t" +
           std::to_string(r.position) + "\t" +
           FormatScore(ReciprocalPosition(r.position)) + "\n";
  }
  return out;
}

std::string PlotDataTsv(const std::array<ClassDistribution, 3>& groups) {
  std::string out = "class\tbugId\treciprocalPosition\n";
  for (const ClassDistribution& g : groups) {
    for (const auto& [bug, value] : g.values) {
      out += std::string(BugClassName(g.bug_class)) + "\t" + bug + "\t" +
             FormatScore(value) + "\n";
    }
  }
  return out;
}

std::string DistributionSummaryTsv(
    const std::array<ClassDistribution, 3>& groups) {
  std::string out = "class\tcount\tmin\tq1\tmedian\tq3\tmax\n";
  for (const ClassDistribution& g : groups) {
    out += std::string(BugClassName(g.bug_class)) + "\t" +
           std::to_string(g.values.size());
    if (g.summary) {
      for (double v : {g.summary->min, g.summary->q1, g.summary->median,
                       g.summary->q3, g.summary->max}) {
        out += "\t" + FormatScore(v);
      }
    } else {
      out += "\tNA\tNA\tNA\tNA\tNA";
    }
    out += "\n";
  }
  return out;
}

std::string ComparisonTsv(const ComparisonTable& table) {
  std::string out = "tool\tNCFB\tNPFB\tfixed\tP3C\trank\n";
  for (const ComparisonRow& row : table.rows) {
    out += row.tool + "\t" + std::to_string(row.ncfb) + "\t" +
           std::to_string(row.npfb) + "\t" + std::to_string(row.ncfb) + "/" +
           std::to_string(row.npfb) + "\t" + table.P3CText(row) + "\t" +
           std::to_string(row.rank) + "\n";
  }
  return out;
}

std::string RankShiftTsv(const std::vector<RankShift>& shifts) {
  std::string out =
      "tool\tallP3C\tallRank\tlocalizableP3C\tlocalizableRank\tmove\n";
  for (const RankShift& s : shifts) {
    out += s.tool + "\t" + s.all.p3c().Format(1) + "\t" +
           std::to_string(s.all.rank) + "\t" + s.localizable.p3c().Format(1) +
           "\t" + std::to_string(s.localizable.rank) + "\t" +
           std::string(RankMoveSymbol(s.move)) + "\n";
  }
  return out;
}

std::string SimulationSummaryTsv(const std::vector<SimulationRecord>& records,
                                 const std::vector<FLConfiguration>& configs) {
  std::string out = "configuration\tcorrect\tplausible\tfixed\n";
  for (FLConfiguration config : configs) {
    int correct = 0;
    int plausible = 0;
    for (const SimulationRecord& r : records) {
      if (r.config != config) continue;
      if (r.outcome.verdict == Verdict::kCorrect) ++correct;
      if (r.outcome.verdict != Verdict::kNone) ++plausible;
    }
    out += std::string(ConfigurationName(config)) + "\t" +
           std::to_string(correct) + "\t" + std::to_string(plausible) + "\t" +
           std::to_string(correct) + "/" + std::to_string(plausible) + "\n";
  }
  return out;
}

std::string SimulationOutcomesTsv(
    const std::vector<SimulationRecord>& records) {
  std::string out = "bugId\tconfiguration\tverdict\ttrialsUsed\tstoppedOn\n";
  for (const SimulationRecord& r : records) {
    out += r.bug_id + "\t" + std::string(ConfigurationName(r.config)) + "\t" +
           std::string(VerdictName(r.outcome.verdict)) + "\t" +
           std::to_string(r.outcome.trials_used) + "\t";
    if (r.outcome.stopped_on) {
      out += r.outcome.stopped_on->first + ":" +
             std::to_string(r.outcome.stopped_on->second);
    } else {
      out += "-";
    }
    out += "\n";
  }
  return out;
}

}  // namespace sbfl
