#include "sbfl/spectra.h"

#include <cmath>
#include <set>
#include <string>

#include "sbfl/errors.h"

namespace sbfl {

CoverageSpectrum::CoverageSpectrum(
    std::vector<Component> components, std::vector<TestOutcome> tests,
    std::vector<std::vector<std::uint8_t>> coverage)
    : components_(std::move(components)), tests_(std::move(tests)) {
  if (components_.empty()) throw UsageError("spectrum has no components");
  if (tests_.empty()) throw UsageError("spectrum has no tests");
  if (coverage.size() != tests_.size()) {
    throw UsageError("coverage has " + std::to_string(coverage.size()) +
                     " rows for " + std::to_string(tests_.size()) + " tests");
  }
  std::set<std::pair<std::string, int>> seen;
  for (const Component& c : components_) {
    if (c.line_number <= 0) {
      throw UsageError("non-positive line number for " + c.file_name);
    }
    if (!seen.emplace(c.file_name, c.line_number).second) {
      throw UsageError("duplicate component " + c.file_name + ":" +
                       std::to_string(c.line_number));
    }
  }
  coverage_.reserve(tests_.size() * components_.size());
  for (const auto& row : coverage) {
    if (row.size() != components_.size()) {
      throw UsageError("coverage row has " + std::to_string(row.size()) +
                       " cells for " + std::to_string(components_.size()) +
                       " components");
    }
    for (std::uint8_t cell : row) {
      if (cell > 1) throw UsageError("coverage cell is not 0 or 1");
      coverage_.push_back(cell);
    }
  }
  for (const TestOutcome& t : tests_) {
    if (!t.passed) ++num_failing_;
  }
}

std::string_view MetricName(RankingMetric metric) {
  switch (metric) {
    case RankingMetric::kTarantula:
      return "tarantula";
    case RankingMetric::kOchiai:
      return "ochiai";
    case RankingMetric::kDStar2:
      return "dstar2";
    case RankingMetric::kBarinel:
      return "barinel";
    case RankingMetric::kOpt2:
      return "opt2";
    case RankingMetric::kMuse:
      return "muse";
    case RankingMetric::kJaccard:
      return "jaccard";
  }
  return "unknown";
}

std::optional<RankingMetric> ParseMetric(std::string_view name) {
  for (RankingMetric m : kAllMetrics) {
    if (MetricName(m) == name) return m;
  }
  return std::nullopt;
}

SpectrumCounts ComputeCounts(const CoverageSpectrum& spectrum,
                             std::size_t component) {
  if (component >= spectrum.num_components()) {
    throw UsageError("component index " + std::to_string(component) +
                     " out of range (" +
                     std::to_string(spectrum.num_components()) +
                     " components)");
  }
  SpectrumCounts counts;
  const auto& tests = spectrum.tests();
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const bool hit = spectrum.covers(t, component);
    if (tests[t].passed) {
      ++(hit ? counts.ep : counts.np);
    } else {
      ++(hit ? counts.ef : counts.nf);
    }
  }
  return counts;
}

namespace {

double SafeDiv(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

double Suspiciousness(RankingMetric metric, const SpectrumCounts& counts) {
  const double ef = static_cast<double>(counts.ef);
  const double ep = static_cast<double>(counts.ep);
  const double nf = static_cast<double>(counts.nf);
  const double failing = static_cast<double>(counts.failing());
  const double passing = static_cast<double>(counts.passing());

  switch (metric) {
    case RankingMetric::kTarantula: {
      const double fail_ratio = SafeDiv(ef, failing);
      const double pass_ratio = SafeDiv(ep, passing);
      return SafeDiv(fail_ratio, fail_ratio + pass_ratio);
    }
    case RankingMetric::kOchiai:
      return SafeDiv(ef, std::sqrt((ef + ep) * (ef + nf)));
    case RankingMetric::kDStar2:
      if (ep + nf == 0.0) return ef > 0.0 ? ef * ef + 1.0 : 0.0;
      return ef * ef / (ep + nf);
    case RankingMetric::kBarinel:
      if (ep + ef == 0.0) return 0.0;
      return 1.0 - ep / (ep + ef);
    case RankingMetric::kOpt2:
      return ef - ep / (passing + 1.0);
    case RankingMetric::kMuse:
      if (passing == 0.0) return ef;
      return ef - (failing / passing) * ep;
    case RankingMetric::kJaccard:
      return SafeDiv(ef, failing + ep);
  }
  return 0.0;
}

std::vector<ScoredComponent> ScoreAll(const CoverageSpectrum& spectrum,
                                      RankingMetric metric) {
  std::vector<ScoredComponent> scored;
  scored.reserve(spectrum.num_components());
  for (std::size_t c = 0; c < spectrum.num_components(); ++c) {
    scored.emplace_back(spectrum.components()[c],
                        Suspiciousness(metric, ComputeCounts(spectrum, c)));
  }
  return scored;
}

}  // namespace sbfl
