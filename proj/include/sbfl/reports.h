#ifndef SBFL_REPORTS_H_
#define SBFL_REPORTS_H_

// Tab-separated report outputs. Every table starts with a header row.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbfl/evaluation.h"
#include "sbfl/locality.h"
#include "sbfl/ranking.h"
#include "sbfl/repairsim.h"

namespace sbfl {

// Shortest representation that parses back to the same double; integral
// values keep a trailing ".0" (1 -> "1.0").
std::string FormatScore(double value);

// rIdx, fileName, lineNumber, score
std::string RankedListTsv(const RankedSuspiciousList& list);

// Cutoffs for Top-k tables; nullopt is the "all localized" column.
using TopKCutoffs = std::vector<std::optional<int>>;

// metric, granularity, then one column per cutoff ("top-1", ..., "all").
// `results` maps (metric, granularity) to one result per bug.
std::string TopKTsv(
    const std::map<std::pair<RankingMetric, Granularity>,
                   std::vector<LocalizationResult>>& results,
    const TopKCutoffs& cutoffs);

// bugId, metric, granularity, position, reciprocalPosition
std::string PositionsTsv(const std::vector<LocalizationResult>& results);

// class, bugId, reciprocalPosition
std::string PlotDataTsv(const std::array<ClassDistribution, 3>& groups);

// class, count, min, q1, median, q3, max ("NA" for empty classes)
std::string DistributionSummaryTsv(
    const std::array<ClassDistribution, 3>& groups);

// tool, NCFB, NPFB, fixed ("x/y"), P3C, rank
std::string ComparisonTsv(const ComparisonTable& table);

// tool, allP3C, allRank, localizableP3C, localizableRank, move; P3C values
// printed with one decimal in both columns.
std::string RankShiftTsv(const std::vector<RankShift>& shifts);

struct SimulationRecord {
  std::string bug_id;
  FLConfiguration config;
  RepairOutcome outcome;
};

// configuration, correct, plausible, fixed ("correct/plausible"); a correct
// fix also counts as plausible.
std::string SimulationSummaryTsv(const std::vector<SimulationRecord>& records,
                                 const std::vector<FLConfiguration>& configs);

// bugId, configuration, verdict, trialsUsed, stoppedOn ("-" when none)
std::string SimulationOutcomesTsv(const std::vector<SimulationRecord>& records);

}  // namespace sbfl

#endif  // SBFL_REPORTS_H_
