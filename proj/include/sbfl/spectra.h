#ifndef SBFL_SPECTRA_H_
#define SBFL_SPECTRA_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sbfl {

struct MethodSpan {
  std::string name;
  int start_line = 0;
  int end_line = 0;

  bool Contains(int line) const {
    return start_line <= line && line <= end_line;
  }
  friend bool operator==(const MethodSpan&, const MethodSpan&) = default;
};

// One program location (a column of the coverage matrix).
struct Component {
  std::string file_name;
  int line_number = 0;
  std::optional<MethodSpan> method;

  friend bool operator==(const Component&, const Component&) = default;
};

struct TestOutcome {
  std::string test_id;
  bool passed = false;

  friend bool operator==(const TestOutcome&, const TestOutcome&) = default;
};

// Immutable coverage matrix: rows are tests, columns are components.
// Construction validates dimensions, non-emptiness and component uniqueness
// and throws UsageError on violation.
class CoverageSpectrum {
 public:
  CoverageSpectrum(std::vector<Component> components,
                   std::vector<TestOutcome> tests,
                   std::vector<std::vector<std::uint8_t>> coverage);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<TestOutcome>& tests() const { return tests_; }

  std::size_t num_components() const { return components_.size(); }
  std::size_t num_tests() const { return tests_.size(); }
  std::size_t num_failing() const { return num_failing_; }
  std::size_t num_passing() const { return tests_.size() - num_failing_; }

  bool covers(std::size_t test, std::size_t component) const {
    return coverage_[test * components_.size() + component] != 0;
  }

  friend bool operator==(const CoverageSpectrum&,
                         const CoverageSpectrum&) = default;

 private:
  std::vector<Component> components_;
  std::vector<TestOutcome> tests_;
  std::vector<std::uint8_t> coverage_;  // row-major
  std::size_t num_failing_ = 0;
};

// ef/ep/nf/np tallies for one component.
struct SpectrumCounts {
  std::int64_t ef = 0;  // failing tests executing the component
  std::int64_t ep = 0;  // passing tests executing the component
  std::int64_t nf = 0;  // failing tests not executing it
  std::int64_t np = 0;  // passing tests not executing it

  std::int64_t failing() const { return ef + nf; }
  std::int64_t passing() const { return ep + np; }
  friend bool operator==(const SpectrumCounts&,
                         const SpectrumCounts&) = default;
};

enum class RankingMetric {
  kTarantula,
  kOchiai,
  kDStar2,
  kBarinel,
  kOpt2,
  kMuse,
  kJaccard,
};

inline constexpr std::array<RankingMetric, 7> kAllMetrics = {
    RankingMetric::kTarantula, RankingMetric::kOchiai, RankingMetric::kDStar2,
    RankingMetric::kBarinel,   RankingMetric::kOpt2,   RankingMetric::kMuse,
    RankingMetric::kJaccard,
};

// Lower-case identifiers used in files and on the command line
// ("tarantula", "ochiai", "dstar2", "barinel", "opt2", "muse", "jaccard").
std::string_view MetricName(RankingMetric metric);
std::optional<RankingMetric> ParseMetric(std::string_view name);

// Throws UsageError if `component` is out of range.
SpectrumCounts ComputeCounts(const CoverageSpectrum& spectrum,
                             std::size_t component);

// Suspiciousness of a component under `metric`.
//
//   Tarantula  (ef/F) / ((ef/F) + (ep/P))
//   Ochiai     ef / sqrt((ef + ep) * (ef + nf))
//   DStar2     ef^2 / (ep + nf)
//   Barinel    1 - ep / (ep + ef)
//   Opt2       ef - ep / (P + 1)
//   Muse       ef - (F / P) * ep
//   Jaccard    ef / (F + ep)
//
// with F = ef + nf and P = ep + np. A zero denominator yields 0, with two
// exceptions: Muse with P = 0 yields ef, and DStar2 with ep + nf = 0 and
// ef > 0 yields ef^2 + 1 so that a component executed by every failing test
// and no passing test still ranks above every other component.
double Suspiciousness(RankingMetric metric, const SpectrumCounts& counts);

using ScoredComponent = std::pair<Component, double>;

// One score per component, in component order.
std::vector<ScoredComponent> ScoreAll(const CoverageSpectrum& spectrum,
                                      RankingMetric metric);

}  // namespace sbfl

#endif  // SBFL_SPECTRA_H_
