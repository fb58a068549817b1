#ifndef SBFL_CLI_H_
#define SBFL_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbfl/corpus.h"
#include "sbfl/formats.h"
#include "sbfl/locality.h"
#include "sbfl/reports.h"

namespace sbfl {

// Name of the environment variable that supplies the output directory when
// --output-dir is not given.
inline constexpr const char* kOutputDirEnv = "SBFL_OUTPUT_DIR";

// Parses "name1,name2" or "all" against the metric names. Throws UsageError
// listing the valid names on an unknown entry.
std::vector<RankingMetric> ParseMetricList(const std::string& text);
std::vector<Granularity> ParseGranularityList(const std::string& text);
std::vector<FLConfiguration> ParseConfigurationList(const std::string& text);
// "1,10,all": positive integers or "all".
TopKCutoffs ParseCutoffList(const std::string& text);

struct LocalizeOptions {
  SpectrumPaths spectrum;
  std::vector<RankingMetric> metrics = {RankingMetric::kOchiai};
  int top = 0;  // 0 keeps every line
  std::filesystem::path output_dir;
};

// Writes ranked_<metric>.tsv per metric; returns the written paths.
std::vector<std::filesystem::path> CmdLocalize(const LocalizeOptions& options);

struct EvaluateOptions {
  std::filesystem::path corpus;
  std::vector<RankingMetric> metrics{kAllMetrics.begin(), kAllMetrics.end()};
  std::vector<Granularity> granularities{kAllGranularities.begin(),
                                         kAllGranularities.end()};
  TopKCutoffs cutoffs = {1, 10, 50, 100, 200, std::nullopt};
  // Defaults to <corpus>/tool_results.csv when that file exists.
  std::optional<std::filesystem::path> tool_results;
  std::filesystem::path output_dir;
  unsigned threads = 0;
};

using ResultTable = std::map<std::pair<RankingMetric, Granularity>,
                             std::vector<LocalizationResult>>;

// Writes topk.tsv, positions.tsv and localizable.txt (bugs localized at the
// finest selected granularity by Ochiai, or by the first selected metric
// when Ochiai is not selected). With tool results it also writes
// plots/plot_<metric>_<granularity>.tsv and the matching
// plots/summary_<metric>_<granularity>.tsv.
ResultTable CmdEvaluate(const EvaluateOptions& options);

struct SimulateOptions {
  std::optional<std::filesystem::path> corpus;
  std::vector<std::filesystem::path> scenario_files;
  std::vector<std::filesystem::path> truth_files;
  std::vector<FLConfiguration> configs{kAllConfigurations.begin(),
                                       kAllConfigurations.end()};
  std::optional<int> budget;  // overrides every scenario budget
  std::filesystem::path output_dir;
  unsigned threads = 0;
};

// Writes simulate_summary.tsv and simulate_outcomes.tsv.
std::vector<SimulationRecord> CmdSimulate(const SimulateOptions& options);

struct ReportOptions {
  std::filesystem::path tool_results;
  std::optional<std::filesystem::path> localizable;
  std::filesystem::path output_dir;
};

// Writes comparison_all.tsv and, with a localizable list,
// comparison_localizable.tsv plus p3c_ranking.tsv.
void CmdReport(const ReportOptions& options);

// Full command-line entry point. Returns the process exit status: 0 on
// success, 2 on usage, input or parse errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace sbfl

#endif  // SBFL_CLI_H_
