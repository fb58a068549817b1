#include "sbfl/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sbfl/errors.h"
#include "sbfl/parallel.h"

namespace sbfl {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

template <typename Enum, std::size_t N, typename NameFn, typename ParseFn>
std::vector<Enum> ParseEnumList(const std::string& text, const char* what,
                                const std::array<Enum, N>& all, NameFn name,
                                ParseFn parse) {
  if (text == "all") return {all.begin(), all.end()};
  std::vector<Enum> out;
  for (const std::string& part : SplitComma(text)) {
    auto value = parse(part);
    if (!value) {
      std::string valid;
      for (Enum e : all) {
        if (!valid.empty()) valid += ", ";
        valid += name(e);
      }
      throw UsageError(std::string("unknown ") + what + " '" + part +
                       "' (valid: " + valid + ", all)");
    }
    if (std::find(out.begin(), out.end(), *value) == out.end()) {
      out.push_back(*value);
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

}  // namespace

std::vector<RankingMetric> ParseMetricList(const std::string& text) {
  return ParseEnumList(text, "metric", kAllMetrics, MetricName, ParseMetric);
}

std::vector<Granularity> ParseGranularityList(const std::string& text) {
  return ParseEnumList(text, "granularity", kAllGranularities,
                       GranularityName, ParseGranularity);
}

std::vector<FLConfiguration> ParseConfigurationList(const std::string& text) {
  return ParseEnumList(text, "configuration", kAllConfigurations,
                       ConfigurationName, ParseConfiguration);
}

TopKCutoffs ParseCutoffList(const std::string& text) {
  TopKCutoffs out;
  for (const std::string& part : SplitComma(text)) {
    if (part == "all") {
      out.push_back(std::nullopt);
      continue;
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), k);
    if (ec != std::errc() || ptr != part.data() + part.size() || k <= 0) {
      throw UsageError("invalid cutoff '" + part +
                       "' (expected a positive integer or all)");
    }
    out.push_back(k);
  }
  if (out.empty()) throw UsageError("empty cutoff list");
  return out;
}

std::vector<fs::path> CmdLocalize(const LocalizeOptions& options) {
  if (options.top < 0) throw UsageError("--top must be non-negative");
  const CoverageSpectrum spectrum = LoadSpectrum(options.spectrum);
  std::vector<fs::path> written;
  for (RankingMetric metric : options.metrics) {
    RankedSuspiciousList list = Rank(ScoreAll(spectrum, metric));
    if (options.top > 0 && list.size() > static_cast<std::size_t>(options.top)) {
      list.resize(static_cast<std::size_t>(options.top));
    }
    const fs::path path = options.output_dir /
                          ("ranked_" + std::string(MetricName(metric)) + ".tsv");
    WriteFile(path, RankedListTsv(list));
    written.push_back(path);
  }
  return written;
}

ResultTable CmdEvaluate(const EvaluateOptions& options) {
  const CorpusBundle corpus = LoadCorpus(options.corpus, options.threads);

  std::vector<std::vector<LocalizationResult>> per_bug(corpus.bugs.size());
  ParallelFor(corpus.bugs.size(), options.threads, [&](std::size_t i) {
    const BugRecord& bug = corpus.bugs[i];
    for (RankingMetric metric : options.metrics) {
      const RankedSuspiciousList list = Rank(ScoreAll(bug.spectrum, metric));
      for (Granularity g : options.granularities) {
        per_bug[i].push_back(Localize(list, bug.truth, g, metric));
      }
    }
  });

  ResultTable table;
  for (RankingMetric m : options.metrics) {
    for (Granularity g : options.granularities) table[{m, g}];
  }
  std::vector<LocalizationResult> flat;
  for (const auto& rows : per_bug) {
    for (const LocalizationResult& r : rows) {
      table[{r.metric, r.granularity}].push_back(r);
      flat.push_back(r);
    }
  }
  WriteFile(options.output_dir / "topk.tsv", TopKTsv(table, options.cutoffs));
  WriteFile(options.output_dir / "positions.tsv", PositionsTsv(flat));

  const RankingMetric lead_metric =
      std::find(options.metrics.begin(), options.metrics.end(),
                RankingMetric::kOchiai) != options.metrics.end()
          ? RankingMetric::kOchiai
          : options.metrics.front();
  const Granularity finest = *std::max_element(options.granularities.begin(),
                                               options.granularities.end());
  std::set<std::string> localizable;
  for (const LocalizationResult& r : table[{lead_metric, finest}]) {
    if (r.position > 0) localizable.insert(r.bug_id);
  }
  WriteFile(options.output_dir / "localizable.txt",
            SerializeBugList(localizable));

  std::vector<ToolResult> tool_results;
  bool have_results = false;
  if (options.tool_results) {
    tool_results = LoadToolResults(*options.tool_results);
    have_results = true;
  } else if (fs::exists(options.corpus / "tool_results.csv")) {
    tool_results = corpus.tool_results;
    have_results = true;
  }
  if (have_results) {
    std::set<std::string> all_bugs;
    for (const BugRecord& b : corpus.bugs) all_bugs.insert(b.truth.bug_id);
    const auto classes = Classify(all_bugs, tool_results);
    for (const auto& [key, rows] : table) {
      std::map<std::string, int> positions;
      for (const LocalizationResult& r : rows) positions[r.bug_id] = r.position;
      const auto groups = DistributionByClass(positions, classes);
      const std::string suffix = std::string(MetricName(key.first)) + "_" +
                                 std::string(GranularityName(key.second)) +
                                 ".tsv";
      WriteFile(options.output_dir / "plots" / ("plot_" + suffix),
                PlotDataTsv(groups));
      WriteFile(options.output_dir / "plots" / ("summary_" + suffix),
                DistributionSummaryTsv(groups));
    }
  }
  return table;
}

std::vector<SimulationRecord> CmdSimulate(const SimulateOptions& options) {
  if (options.budget && *options.budget < 0) {
    throw UsageError("--budget must be non-negative");
  }
  std::vector<RepairScenario> scenarios;
  TruthIndex truths;
  if (options.corpus) {
    CorpusBundle corpus = LoadCorpus(*options.corpus, options.threads);
    truths = corpus.Truths();
    scenarios = std::move(corpus.scenarios);
  }
  for (const fs::path& p : options.truth_files) {
    BugPositionSet truth = LoadGroundTruth(p);
    const std::string id = truth.bug_id;
    if (!truths.emplace(id, std::move(truth)).second) {
      throw ParseError(ParseErrorKind::kDuplicateKey, p.string(), 0,
                       "ground truth for '" + id + "' given twice");
    }
  }
  for (const fs::path& p : options.scenario_files) {
    scenarios.push_back(LoadScenario(p, truths));
  }
  std::stable_sort(scenarios.begin(), scenarios.end(),
                   [](const RepairScenario& a, const RepairScenario& b) {
                     return a.bug_id < b.bug_id;
                   });

  std::vector<std::vector<SimulationRecord>> slots(scenarios.size());
  ParallelFor(scenarios.size(), options.threads, [&](std::size_t i) {
    RepairScenario base = scenarios[i];
    if (options.budget) base.budget = *options.budget;
    const auto outcomes = SweepConfigurations(base, options.configs);
    for (FLConfiguration c : options.configs) {
      slots[i].push_back({base.bug_id, c, outcomes.at(c)});
    }
  });
  std::vector<SimulationRecord> records;
  for (auto& s : slots) {
    for (auto& r : s) records.push_back(std::move(r));
  }
  WriteFile(options.output_dir / "simulate_summary.tsv",
            SimulationSummaryTsv(records, options.configs));
  WriteFile(options.output_dir / "simulate_outcomes.tsv",
            SimulationOutcomesTsv(records));
  return records;
}

void CmdReport(const ReportOptions& options) {
  const std::vector<ToolResult> results = LoadToolResults(options.tool_results);
  const ComparisonTable all = BuildComparisonTable(results, std::nullopt);
  WriteFile(options.output_dir / "comparison_all.tsv", ComparisonTsv(all));
  if (options.localizable) {
    const ComparisonTable filtered =
        BuildComparisonTable(results, LoadBugList(*options.localizable));
    WriteFile(options.output_dir / "comparison_localizable.tsv",
              ComparisonTsv(filtered));
    WriteFile(options.output_dir / "p3c_ranking.tsv",
              RankShiftTsv(CompareRankings(all, filtered)));
  }
}

namespace {

fs::path ResolveOutputDir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return "out";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Spectrum-based fault localization toolkit and repair-bias "
               "evaluation harness",
               "sbfl"};
  app.require_subcommand(1);

  std::string output_dir;
  unsigned threads = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output-dir", output_dir,
                    std::string("Output directory (default: $") +
                        kOutputDirEnv + " or ./out)");
    cmd->add_option("--threads", threads,
                    "Worker threads (0 = all available cores)");
  };

  // localize
  std::string matrix, spectra, tests, metric_text = "ochiai";
  int top = 0;
  CLI::App* localize =
      app.add_subcommand("localize", "Rank suspicious lines of one spectrum");
  localize->add_option("--matrix", matrix, "Coverage matrix file")->required();
  localize->add_option("--spectra", spectra, "Component list file")->required();
  localize->add_option("--tests", tests, "Test outcome file")->required();
  localize->add_option("--metric", metric_text,
                       "Ranking metric name, comma list, or all");
  localize->add_option("--top", top, "Keep the first N lines (0 = all)");
  add_common(localize);

  // evaluate
  std::string corpus_dir, metrics_text = "all", granularities_text = "all",
                          k_text = "1,10,50,100,200,all", tool_results_path;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Localizability Top-k tables over a corpus");
  evaluate->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  evaluate->add_option("--metrics", metrics_text,
                       "Metric names (comma list) or all");
  evaluate->add_option("--granularities", granularities_text,
                       "file,method,line or all");
  evaluate->add_option("--k", k_text, "Top-k cutoffs, e.g. 1,10,all");
  evaluate->add_option("--tool-results", tool_results_path,
                       "Tool results CSV for per-class plot data");
  add_common(evaluate);

  // simulate
  std::string sim_corpus, configs_text = "all";
  std::vector<std::string> scenario_files, truth_files;
  int budget = -1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Simulate the repair loop under FL configurations");
  simulate->add_option("--corpus", sim_corpus,
                       "Corpus directory (bugs/ and scenarios/)");
  simulate->add_option("--scenario", scenario_files, "Scenario JSON file(s)");
  simulate->add_option("--truth", truth_files, "Ground-truth JSON file(s)");
  simulate->add_option("--configs", configs_text,
                       "normal-fl,file-assumption,method-assumption,"
                       "line-assumption or all");
  simulate->add_option("--budget", budget,
                       "Trial budget overriding every scenario");
  add_common(simulate);

  // report
  std::string results_path, localizable_path;
  CLI::App* report = app.add_subcommand(
      "report", "NPFB/NCFB/P3C comparison tables from tool results");
  report->add_option("--tool-results", results_path, "Tool results CSV")
      ->required();
  report->add_option("--localizable", localizable_path,
                     "Bug id list restricting the second table");
  add_common(report);

  // gen-corpus
  std::uint64_t seed = 42;
  CorpusParams params;
  std::string fault_model = "mixed";
  CLI::App* gen =
      app.add_subcommand("gen-corpus", "Generate a seeded synthetic corpus");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--bugs", params.bugs, "Number of bugs");
  gen->add_option("--files", params.files, "Files per bug");
  gen->add_option("--lines-per-file", params.lines_per_file, "Lines per file");
  gen->add_option("--tests", params.tests, "Tests per bug");
  gen->add_option("--fault-model", fault_model,
                  "single-line, multi-line, multi-file or mixed");
  gen->add_option("--tools", params.tools, "Synthetic repair tools");
  gen->add_option("--noise", params.noise,
                  "Probability a passing test executes a faulty line");
  gen->add_option("--unlocalizable-rate", params.unlocalizable_rate,
                  "Probability the faulty lines are missing from the spectrum");
  add_common(gen);

  std::vector<const char*> argv;
  argv.push_back("sbfl");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const fs::path out_dir = ResolveOutputDir(output_dir);
    if (localize->parsed()) {
      LocalizeOptions o;
      o.spectrum = {matrix, spectra, tests};
      o.metrics = ParseMetricList(metric_text);
      o.top = top;
      o.output_dir = out_dir;
      for (const fs::path& p : CmdLocalize(o)) out << p.string() << "\n";
    } else if (evaluate->parsed()) {
      EvaluateOptions o;
      o.corpus = corpus_dir;
      o.metrics = ParseMetricList(metrics_text);
      o.granularities = ParseGranularityList(granularities_text);
      o.cutoffs = ParseCutoffList(k_text);
      if (!tool_results_path.empty()) o.tool_results = tool_results_path;
      o.output_dir = out_dir;
      o.threads = threads;
      const ResultTable table = CmdEvaluate(o);
      out << TopKTsv(table, o.cutoffs);
    } else if (simulate->parsed()) {
      SimulateOptions o;
      if (!sim_corpus.empty()) o.corpus = sim_corpus;
      for (const auto& s : scenario_files) o.scenario_files.emplace_back(s);
      for (const auto& t : truth_files) o.truth_files.emplace_back(t);
      if (!o.corpus && o.scenario_files.empty()) {
        throw UsageError("simulate needs --corpus or --scenario");
      }
      o.configs = ParseConfigurationList(configs_text);
      if (simulate->count("--budget") > 0) o.budget = budget;
      o.output_dir = out_dir;
      o.threads = threads;
      out << SimulationSummaryTsv(CmdSimulate(o), o.configs);
    } else if (report->parsed()) {
      ReportOptions o;
      o.tool_results = results_path;
      if (!localizable_path.empty()) o.localizable = localizable_path;
      o.output_dir = out_dir;
      CmdReport(o);
      out << ReadFile(out_dir / "comparison_all.tsv");
    } else if (gen->parsed()) {
      auto model = ParseFaultModel(fault_model);
      if (!model) {
        throw UsageError("unknown fault model '" + fault_model +
                         "' (valid: single-line, multi-line, multi-file, "
                         "mixed)");
      }
      params.fault_model = *model;
      SaveCorpus(GenerateCorpus(seed, params, threads), out_dir);
      out << out_dir.string() << "\n";
    }
  } catch (const std::exception& e) {
    err << "sbfl: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sbfl
