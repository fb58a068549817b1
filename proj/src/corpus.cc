#include "sbfl/corpus.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sbfl/errors.h"
#include "sbfl/parallel.h"
#include "sbfl/ranking.h"

namespace sbfl {

namespace fs = std::filesystem;

TruthIndex CorpusBundle::Truths() const {
  TruthIndex index;
  for (const BugRecord& bug : bugs) index.emplace(bug.truth.bug_id, bug.truth);
  return index;
}

SpectrumPaths BugSpectrumPaths(const fs::path& bug_dir) {
  return {bug_dir / "matrix.txt", bug_dir / "spectra.txt",
          bug_dir / "tests.txt"};
}

CorpusBundle LoadCorpus(const fs::path& dir, unsigned threads) {
  const fs::path bugs_dir = dir / "bugs";
  if (!fs::is_directory(bugs_dir)) {
    throw ParseError(ParseErrorKind::kIo, bugs_dir.string(), 0,
                     "corpus has no bugs directory");
  }
  std::vector<fs::path> bug_dirs;
  for (const auto& entry : fs::directory_iterator(bugs_dir)) {
    if (entry.is_directory()) bug_dirs.push_back(entry.path());
  }
  std::sort(bug_dirs.begin(), bug_dirs.end());

  std::vector<std::optional<BugRecord>> slots(bug_dirs.size());
  ParallelFor(bug_dirs.size(), threads, [&](std::size_t i) {
    const fs::path truth_path = bug_dirs[i] / "truth.json";
    BugPositionSet truth = LoadGroundTruth(truth_path);
    if (truth.bug_id != bug_dirs[i].filename().string()) {
      throw ParseError(ParseErrorKind::kReferentialIntegrity,
                       truth_path.string(), 0,
                       "bugId '" + truth.bug_id + "' does not match directory");
    }
    slots[i].emplace(
        BugRecord{std::move(truth), LoadSpectrum(BugSpectrumPaths(bug_dirs[i]))});
  });

  CorpusBundle bundle;
  for (auto& slot : slots) bundle.bugs.push_back(std::move(*slot));
  const TruthIndex truths = bundle.Truths();

  const fs::path results_path = dir / "tool_results.csv";
  if (fs::exists(results_path)) {
    bundle.tool_results = LoadToolResults(results_path);
    for (std::size_t i = 0; i < bundle.tool_results.size(); ++i) {
      const ToolResult& r = bundle.tool_results[i];
      if (!truths.contains(r.bug_id)) {
        throw ParseError(ParseErrorKind::kReferentialIntegrity,
                         results_path.string(), i + 1,
                         "unknown bugId '" + r.bug_id + "'");
      }
    }
  }

  const fs::path scenario_dir = dir / "scenarios";
  if (fs::is_directory(scenario_dir)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(scenario_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      bundle.scenarios.push_back(LoadScenario(f, truths));
    }
  }
  return bundle;
}

void SaveCorpus(const CorpusBundle& bundle, const fs::path& dir) {
  fs::create_directories(dir / "bugs");
  for (const BugRecord& bug : bundle.bugs) {
    const fs::path bug_dir = dir / "bugs" / bug.truth.bug_id;
    SaveSpectrum(bug.spectrum, BugSpectrumPaths(bug_dir));
    WriteFile(bug_dir / "truth.json", SerializeGroundTruth(bug.truth));
  }
  WriteFile(dir / "tool_results.csv", SerializeToolResults(bundle.tool_results));
  std::set<std::string> written;
  for (const RepairScenario& s : bundle.scenarios) {
    if (!written.insert(s.bug_id).second) {
      throw UsageError("two scenarios for bug " + s.bug_id);
    }
    WriteFile(dir / "scenarios" / (s.bug_id + ".json"), SerializeScenario(s));
  }
}

std::string_view FaultModelName(FaultModel model) {
  switch (model) {
    case FaultModel::kSingleLine:
      return "single-line";
    case FaultModel::kMultiLine:
      return "multi-line";
    case FaultModel::kMultiFile:
      return "multi-file";
    case FaultModel::kMixed:
      return "mixed";
  }
  return "unknown";
}

std::optional<FaultModel> ParseFaultModel(std::string_view name) {
  for (FaultModel m : {FaultModel::kSingleLine, FaultModel::kMultiLine,
                       FaultModel::kMultiFile, FaultModel::kMixed}) {
    if (FaultModelName(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

// Portable draws on top of mt19937_64; the standard distributions are
// implementation-defined and would break cross-platform byte identity.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  // Uniform in [0, n).
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = engine_.max() - engine_.max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int Int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool Chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

struct FileLayout {
  std::string name;
  int header_lines = 0;
  std::vector<MethodSpan> methods;

  const MethodSpan* MethodOf(int line) const {
    for (const MethodSpan& m : methods) {
      if (m.Contains(line)) return &m;
    }
    return nullptr;
  }
};

FileLayout LayOutFile(Draw& draw, int index, int lines) {
  FileLayout layout;
  layout.name = "pkg/Unit" + std::to_string(index) + ".java";
  layout.header_lines = lines >= 6 ? 2 : 0;
  int next = layout.header_lines + 1;
  int count = 0;
  while (next <= lines) {
    const int end = std::min(lines, next + draw.Int(2, 9));
    layout.methods.push_back({"method" + std::to_string(count++), next, end});
    next = end + 1;
  }
  return layout;
}

std::vector<int> PickLinesInMethod(Draw& draw, const MethodSpan& m, int want) {
  std::vector<int> pool;
  for (int l = m.start_line; l <= m.end_line; ++l) pool.push_back(l);
  std::vector<int> picked;
  while (static_cast<int>(picked.size()) < want && !pool.empty()) {
    const std::size_t i = draw.Below(pool.size());
    picked.push_back(pool[i]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

BugPosition PlantInFile(Draw& draw, const FileLayout& file, int want,
                        bool allow_declaration) {
  BugPosition pos;
  pos.file_name = file.name;
  if (allow_declaration && file.header_lines > 0 && draw.Chance(0.05)) {
    // Fault in a field declaration: no enclosing method.
    pos.lines = {draw.Int(1, file.header_lines)};
    return pos;
  }
  const MethodSpan& m = file.methods[draw.Below(file.methods.size())];
  pos.lines = PickLinesInMethod(draw, m, want);
  pos.methods = {m};
  return pos;
}

struct GeneratedBug {
  std::optional<BugRecord> record;
  std::vector<ToolOutcome> tool_outcomes;
  RepairScenario scenario;
};

GeneratedBug GenerateBug(std::uint64_t seed, int index,
                         const CorpusParams& params, const std::string& id) {
  Draw draw(seed, static_cast<std::uint64_t>(index));
  GeneratedBug out;

  std::vector<FileLayout> files;
  for (int f = 0; f < params.files; ++f) {
    files.push_back(LayOutFile(draw, f, params.lines_per_file));
  }

  FaultModel model = params.fault_model;
  if (model == FaultModel::kMixed) {
    const auto r = draw.Below(100);
    model = r < 60   ? FaultModel::kSingleLine
            : r < 85 ? FaultModel::kMultiLine
                     : FaultModel::kMultiFile;
  }
  if (model == FaultModel::kMultiFile && params.files < 2) {
    model = FaultModel::kMultiLine;
  }

  BugPositionSet truth;
  truth.bug_id = id;
  const std::size_t first = draw.Below(files.size());
  switch (model) {
    case FaultModel::kSingleLine:
      truth.positions.push_back(PlantInFile(draw, files[first], 1, true));
      break;
    case FaultModel::kMultiLine:
      truth.positions.push_back(
          PlantInFile(draw, files[first], draw.Int(2, 3), false));
      break;
    case FaultModel::kMultiFile:
    case FaultModel::kMixed: {
      std::size_t second = draw.Below(files.size() - 1);
      if (second >= first) ++second;
      for (std::size_t f : {std::min(first, second), std::max(first, second)}) {
        truth.positions.push_back(
            PlantInFile(draw, files[f], draw.Int(1, 2), false));
      }
      break;
    }
  }

  // Full component list, then the column set that ends up in the spectrum.
  std::vector<Component> all;
  std::map<Location, std::size_t> column_of;
  for (const FileLayout& file : files) {
    for (int line = 1; line <= params.lines_per_file; ++line) {
      Component c{file.name, line, std::nullopt};
      if (const MethodSpan* m = file.MethodOf(line)) c.method = *m;
      column_of[{file.name, line}] = all.size();
      all.push_back(std::move(c));
    }
  }
  const auto fault_locations = truth.Locations();
  std::set<std::size_t> fault_columns;
  for (const Location& loc : fault_locations) {
    fault_columns.insert(column_of.at(loc));
  }
  bool drop_faults = draw.Chance(params.unlocalizable_rate);
  if (fault_columns.size() == all.size()) drop_faults = false;

  const int num_tests = params.tests;
  int num_failing = 1;
  if (num_tests >= 2) {
    num_failing = std::min(num_tests - 1, 1 + static_cast<int>(draw.Below(
                                                  std::max(1, num_tests / 4))));
  }
  std::vector<int> order(static_cast<std::size_t>(num_tests));
  for (int t = 0; t < num_tests; ++t) order[static_cast<std::size_t>(t)] = t;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[draw.Below(i)]);
  }
  std::vector<bool> fails(order.size(), false);
  for (int i = 0; i < num_failing; ++i) {
    fails[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;
  }

  std::vector<TestOutcome> tests;
  std::vector<std::vector<std::uint8_t>> full(
      order.size(), std::vector<std::uint8_t>(all.size(), 0));
  for (std::size_t t = 0; t < order.size(); ++t) {
    tests.push_back({"pkg.UnitTest::case" + std::to_string(t), !fails[t]});
    auto& row = full[t];
    for (const FileLayout& file : files) {
      for (int line = 1; line <= file.header_lines; ++line) {
        row[column_of.at({file.name, line})] = draw.Chance(0.5);
      }
      for (const MethodSpan& m : file.methods) {
        if (!draw.Chance(0.35)) continue;
        for (int line = m.start_line; line <= m.end_line; ++line) {
          row[column_of.at({file.name, line})] = draw.Chance(0.9);
        }
      }
    }
    bool hit = false;
    for (std::size_t c : fault_columns) {
      const bool cover = fails[t] ? draw.Chance(0.7) : draw.Chance(params.noise);
      row[c] = cover;
      hit = hit || cover;
    }
    if (fails[t] && !hit) {
      auto it = fault_columns.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(
                           draw.Below(fault_columns.size())));
      row[*it] = 1;
    }
  }

  // Keep the exact "all failing, no passing" signature unique to faults.
  const auto first_pass = std::find(fails.begin(), fails.end(), false);
  if (first_pass != fails.end()) {
    const auto pass_row = static_cast<std::size_t>(first_pass - fails.begin());
    for (std::size_t c = 0; c < all.size(); ++c) {
      if (fault_columns.contains(c)) continue;
      bool perfect = true;
      for (std::size_t t = 0; t < full.size() && perfect; ++t) {
        perfect = (full[t][c] != 0) == fails[t];
      }
      if (perfect) full[pass_row][c] = 1;
    }
  }

  std::vector<Component> components;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < all.size(); ++c) {
    if (drop_faults && fault_columns.contains(c)) continue;
    kept.push_back(c);
    components.push_back(all[c]);
  }
  std::vector<std::vector<std::uint8_t>> coverage;
  for (const auto& row : full) {
    std::vector<std::uint8_t> cells;
    cells.reserve(kept.size());
    for (std::size_t c : kept) cells.push_back(row[c]);
    coverage.push_back(std::move(cells));
  }
  CoverageSpectrum spectrum(std::move(components), std::move(tests),
                            std::move(coverage));

  for (int t = 0; t < params.tools; ++t) {
    const auto r = draw.Below(100);
    out.tool_outcomes.push_back(r < 12   ? ToolOutcome::kCorrect
                                : r < 27 ? ToolOutcome::kPlausible
                                         : ToolOutcome::kNone);
  }

  RepairScenario& scenario = out.scenario;
  scenario.bug_id = id;
  scenario.truth = truth;
  scenario.ranked_list = Rank(ScoreAll(spectrum, RankingMetric::kOchiai));
  scenario.budget = draw.Int(5, 50);
  scenario.config = FLConfiguration::kNormalFL;
  scenario.joint_edit = true;
  const bool single = fault_locations.size() == 1;
  for (const Location& loc : fault_locations) {
    const auto r = draw.Below(100);
    if (single) {
      if (r < 75) {
        scenario.oracle[loc] = LocationOutcome::kCorrectPatch;
      } else if (r < 85) {
        scenario.oracle[loc] = LocationOutcome::kPlausibleOnly;
      }
    } else if (r < 85) {
      scenario.oracle[loc] = LocationOutcome::kPartialCorrect;
    }
  }
  const std::set<Location> fault_set(fault_locations.begin(),
                                     fault_locations.end());
  for (const SuspiciousLine& line : scenario.ranked_list) {
    Location loc{line.file_name, line.line_number};
    if (!fault_set.contains(loc) && draw.Chance(0.03)) {
      scenario.oracle[loc] = LocationOutcome::kPlausibleOnly;
    }
  }

  out.record.emplace(BugRecord{std::move(truth), std::move(spectrum)});
  return out;
}

void CheckParams(const CorpusParams& p) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InputError(std::string("infeasible corpus parameters: ") + what);
  };
  require(p.bugs >= 1, "bugs must be positive");
  require(p.files >= 1, "files must be positive");
  require(p.lines_per_file >= 1, "lines per file must be positive");
  require(p.tests >= 1, "tests must be positive");
  require(p.tools >= 0, "tools must be non-negative");
  require(p.noise >= 0.0 && p.noise <= 1.0, "noise must lie in [0, 1]");
  require(p.unlocalizable_rate >= 0.0 && p.unlocalizable_rate <= 1.0,
          "unlocalizable rate must lie in [0, 1]");
}

std::string BugId(int index, int total) {
  std::string digits = std::to_string(index + 1);
  const std::size_t width = std::max<std::size_t>(3, std::to_string(total).size());
  return "Synth-" + std::string(width - std::min(width, digits.size()), '0') +
         digits;
}

std::string ToolName(int index) {
  if (index < 26) return std::string("Tool") + static_cast<char>('A' + index);
  return "Tool" + std::to_string(index + 1);
}

}  // namespace

CorpusBundle GenerateCorpus(std::uint64_t seed, const CorpusParams& params,
                            unsigned threads) {
  CheckParams(params);
  std::vector<GeneratedBug> generated(static_cast<std::size_t>(params.bugs));
  ParallelFor(generated.size(), threads, [&](std::size_t i) {
    const int index = static_cast<int>(i);
    generated[i] = GenerateBug(seed, index, params, BugId(index, params.bugs));
  });

  CorpusBundle bundle;
  for (GeneratedBug& g : generated) {
    bundle.bugs.push_back(std::move(*g.record));
    bundle.scenarios.push_back(std::move(g.scenario));
  }
  for (int t = 0; t < params.tools; ++t) {
    for (std::size_t b = 0; b < generated.size(); ++b) {
      const ToolOutcome o = generated[b].tool_outcomes[static_cast<std::size_t>(t)];
      if (o != ToolOutcome::kNone) {
        bundle.tool_results.push_back(
            {ToolName(t), bundle.bugs[b].truth.bug_id, o});
      }
    }
  }
  return bundle;
}

}  // namespace sbfl
