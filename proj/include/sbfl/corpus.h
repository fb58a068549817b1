#ifndef SBFL_CORPUS_H_
#define SBFL_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbfl/bug_position.h"
#include "sbfl/evaluation.h"
#include "sbfl/formats.h"
#include "sbfl/repairsim.h"
#include "sbfl/spectra.h"

namespace sbfl {

// On-disk layout of a corpus directory:
//
//   bugs/<bugId>/matrix.txt
//   bugs/<bugId>/spectra.txt
//   bugs/<bugId>/tests.txt
//   bugs/<bugId>/truth.json
//   tool_results.csv            (optional)
//   scenarios/<bugId>.json      (optional)

struct BugRecord {
  BugPositionSet truth;
  CoverageSpectrum spectrum;
};

struct CorpusBundle {
  std::vector<BugRecord> bugs;  // sorted by bug id
  std::vector<ToolResult> tool_results;
  std::vector<RepairScenario> scenarios;  // sorted by bug id

  TruthIndex Truths() const;
};

SpectrumPaths BugSpectrumPaths(const std::filesystem::path& bug_dir);

// Reads and cross-validates a corpus: truth bug ids match their directory,
// tool results and scenarios reference known bugs. A missing `bugs/`
// directory is an error; an empty one is an empty corpus.
CorpusBundle LoadCorpus(const std::filesystem::path& dir, unsigned threads);

// Writes every file of the bundle in canonical form.
void SaveCorpus(const CorpusBundle& bundle, const std::filesystem::path& dir);

enum class FaultModel { kSingleLine, kMultiLine, kMultiFile, kMixed };

// "single-line", "multi-line", "multi-file", "mixed".
std::string_view FaultModelName(FaultModel model);
std::optional<FaultModel> ParseFaultModel(std::string_view name);

struct CorpusParams {
  int bugs = 20;
  int files = 4;
  int lines_per_file = 30;
  int tests = 12;
  FaultModel fault_model = FaultModel::kMixed;
  int tools = 3;
  // Probability that a passing test also executes a faulty line.
  double noise = 0.2;
  // Probability that the faulty lines are missing from the spectrum.
  double unlocalizable_rate = 0.1;
};

// Deterministic synthetic corpus. Each bug draws from its own stream seeded
// by (seed, bug index), so the result does not depend on `threads`. Every
// bug has at least one failing test, and no non-faulty component is
// executed by exactly the failing tests. Throws InputError for infeasible
// parameters.
CorpusBundle GenerateCorpus(std::uint64_t seed, const CorpusParams& params,
                            unsigned threads);

}  // namespace sbfl

#endif  // SBFL_CORPUS_H_
