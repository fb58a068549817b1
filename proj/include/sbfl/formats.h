#ifndef SBFL_FORMATS_H_
#define SBFL_FORMATS_H_

// Text formats for spectra, ground truth, tool results and repair scenarios.
//
// Matrix    one row per test, space-separated 0/1 cells (one per component)
//           followed by `+` (passed) or `-` (failed).
// Spectra   one component per line: `file:line` or
//           `file:line#method@start-end`; line i names matrix column i.
// Tests     one `testId,+` or `testId,-` per line, in matrix row order.
// Truth     JSON {"bugId", "positions": [{"file", "lines", "methods":
//           [{"name", "start", "end"}]}]}.
// Results   CSV `tool,bugId,outcome` with outcome correct|plausible|none.
// Scenario  JSON {"bugId", "budget", "config", "jointEdit", "rankedList":
//           [{"file", "line", "score"}], "oracle": [{"file", "line",
//           "outcome"}]}; the ground truth is looked up by bugId.
// Bug list  one bug id per line.
//
// All files are UTF-8 with `\n` line endings and end with a newline.
// Parsers throw ParseError naming the file and line.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbfl/bug_position.h"
#include "sbfl/evaluation.h"
#include "sbfl/repairsim.h"
#include "sbfl/spectra.h"

namespace sbfl {

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

struct SpectrumText {
  std::string matrix;
  std::string spectra;
  std::string tests;
};

struct SpectrumPaths {
  std::filesystem::path matrix;
  std::filesystem::path spectra;
  std::filesystem::path tests;
};

CoverageSpectrum ParseSpectrum(const SpectrumText& text,
                               const SpectrumPaths& names);
CoverageSpectrum LoadSpectrum(const SpectrumPaths& paths);
SpectrumText SerializeSpectrum(const CoverageSpectrum& spectrum);
void SaveSpectrum(const CoverageSpectrum& spectrum, const SpectrumPaths& paths);

BugPositionSet ParseGroundTruth(std::string_view text, const std::string& file);
BugPositionSet LoadGroundTruth(const std::filesystem::path& path);
std::string SerializeGroundTruth(const BugPositionSet& truth);

std::vector<ToolResult> ParseToolResults(std::string_view text,
                                         const std::string& file);
std::vector<ToolResult> LoadToolResults(const std::filesystem::path& path);
std::string SerializeToolResults(const std::vector<ToolResult>& results);

using TruthIndex = std::map<std::string, BugPositionSet>;

RepairScenario ParseScenario(std::string_view text, const std::string& file,
                             const TruthIndex& truths);
RepairScenario LoadScenario(const std::filesystem::path& path,
                            const TruthIndex& truths);
std::string SerializeScenario(const RepairScenario& scenario);

std::set<std::string> ParseBugList(std::string_view text,
                                   const std::string& file);
std::set<std::string> LoadBugList(const std::filesystem::path& path);
std::string SerializeBugList(const std::set<std::string>& bugs);

}  // namespace sbfl

#endif  // SBFL_FORMATS_H_
