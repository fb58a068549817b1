#include "sbfl/formats.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sbfl/errors.h"

namespace sbfl {

using nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseErrorKind::kIo, path.string(), 0,
                     "cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw ParseError(ParseErrorKind::kIo, path.string(), 0,
                     "cannot write file");
  }
}

namespace {

// Splits newline-terminated text into lines. A missing final newline is a
// malformed row; so are carriage returns.
std::vector<std::string_view> SplitLines(std::string_view text,
                                         const std::string& file) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      throw ParseError(ParseErrorKind::kMalformedRow, file, lines.size() + 1,
                       "missing final newline");
    }
    std::string_view line = text.substr(start, end - start);
    if (line.find('\r') != std::string_view::npos) {
      throw ParseError(ParseErrorKind::kMalformedRow, file, lines.size() + 1,
                       "carriage return");
    }
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Strict positive decimal: no sign, no leading zeros.
std::optional<int> ParsePositive(std::string_view s) {
  if (s.empty() || s.front() == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0) {
    return std::nullopt;
  }
  return value;
}

Component ParseComponent(std::string_view text, const std::string& file,
                         std::size_t line_no) {
  auto malformed = [&](const std::string& why) {
    return ParseError(ParseErrorKind::kMalformedRow, file, line_no,
                      why + ": '" + std::string(text) + "'");
  };
  std::string_view location = text;
  std::string_view method;
  const std::size_t hash = text.find('#');
  if (hash != std::string_view::npos) {
    location = text.substr(0, hash);
    method = text.substr(hash + 1);
  }
  const std::size_t colon = location.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw malformed("expected file:line");
  }
  Component c;
  c.file_name = std::string(location.substr(0, colon));
  auto line = ParsePositive(location.substr(colon + 1));
  if (!line) throw malformed("bad line number");
  c.line_number = *line;
  if (hash != std::string_view::npos) {
    const std::size_t at = method.rfind('@');
    if (at == std::string_view::npos || at == 0) {
      throw malformed("expected method@start-end");
    }
    std::string_view span = method.substr(at + 1);
    const std::size_t dash = span.find('-');
    if (dash == std::string_view::npos) throw malformed("bad method span");
    auto start = ParsePositive(span.substr(0, dash));
    auto end = ParsePositive(span.substr(dash + 1));
    if (!start || !end || *end < *start) throw malformed("bad method span");
    c.method = MethodSpan{std::string(method.substr(0, at)), *start, *end};
  }
  return c;
}

}  // namespace

CoverageSpectrum ParseSpectrum(const SpectrumText& text,
                               const SpectrumPaths& names) {
  const std::string spectra_file = names.spectra.string();
  const std::string tests_file = names.tests.string();
  const std::string matrix_file = names.matrix.string();

  std::vector<Component> components;
  std::set<std::pair<std::string, int>> seen;
  const auto spectra_lines = SplitLines(text.spectra, spectra_file);
  for (std::size_t i = 0; i < spectra_lines.size(); ++i) {
    Component c = ParseComponent(spectra_lines[i], spectra_file, i + 1);
    if (!seen.emplace(c.file_name, c.line_number).second) {
      throw ParseError(ParseErrorKind::kDuplicateComponent, spectra_file, i + 1,
                       c.file_name + ":" + std::to_string(c.line_number));
    }
    components.push_back(std::move(c));
  }
  if (components.empty()) {
    throw ParseError(ParseErrorKind::kDimensionMismatch, spectra_file, 0,
                     "no components");
  }

  std::vector<TestOutcome> tests;
  const auto test_lines = SplitLines(text.tests, tests_file);
  for (std::size_t i = 0; i < test_lines.size(); ++i) {
    std::string_view line = test_lines[i];
    const std::size_t comma = line.rfind(',');
    if (comma == std::string_view::npos || comma == 0 ||
        comma + 2 != line.size() ||
        (line.back() != '+' && line.back() != '-')) {
      throw ParseError(ParseErrorKind::kMalformedRow, tests_file, i + 1,
                       "expected testId,+ or testId,-");
    }
    tests.push_back({std::string(line.substr(0, comma)), line.back() == '+'});
  }
  if (tests.empty()) {
    throw ParseError(ParseErrorKind::kDimensionMismatch, tests_file, 0,
                     "no tests");
  }

  const auto rows = SplitLines(text.matrix, matrix_file);
  if (rows.size() != tests.size()) {
    throw ParseError(ParseErrorKind::kDimensionMismatch, matrix_file,
                     std::min(rows.size(), tests.size()) + 1,
                     std::to_string(rows.size()) + " rows for " +
                         std::to_string(tests.size()) + " tests");
  }
  std::vector<std::vector<std::uint8_t>> coverage;
  coverage.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string_view row = rows[r];
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
      const std::size_t space = row.find(' ', start);
      tokens.push_back(row.substr(start, space - start));
      if (space == std::string_view::npos) break;
      start = space + 1;
    }
    for (std::string_view t : tokens) {
      if (t.empty()) {
        throw ParseError(ParseErrorKind::kMalformedRow, matrix_file, r + 1,
                         "empty cell");
      }
    }
    std::string_view verdict = tokens.back();
    if (verdict != "+" && verdict != "-") {
      throw ParseError(ParseErrorKind::kMalformedRow, matrix_file, r + 1,
                       "row must end with + or -");
    }
    if (tokens.size() - 1 != components.size()) {
      throw ParseError(ParseErrorKind::kDimensionMismatch, matrix_file, r + 1,
                       std::to_string(tokens.size() - 1) + " cells for " +
                           std::to_string(components.size()) + " components");
    }
    std::vector<std::uint8_t> cells;
    cells.reserve(components.size());
    for (std::size_t c = 0; c + 1 < tokens.size(); ++c) {
      if (tokens[c] != "0" && tokens[c] != "1") {
        throw ParseError(ParseErrorKind::kNonBinaryCell, matrix_file, r + 1,
                         "column " + std::to_string(c + 1) + " is '" +
                             std::string(tokens[c]) + "'");
      }
      cells.push_back(tokens[c] == "1" ? 1 : 0);
    }
    if ((verdict == "+") != tests[r].passed) {
      throw ParseError(ParseErrorKind::kOutcomeMismatch, matrix_file, r + 1,
                       "outcome disagrees with test " + tests[r].test_id);
    }
    coverage.push_back(std::move(cells));
  }
  return CoverageSpectrum(std::move(components), std::move(tests),
                          std::move(coverage));
}

CoverageSpectrum LoadSpectrum(const SpectrumPaths& paths) {
  return ParseSpectrum(
      {ReadFile(paths.matrix), ReadFile(paths.spectra), ReadFile(paths.tests)},
      paths);
}

SpectrumText SerializeSpectrum(const CoverageSpectrum& spectrum) {
  SpectrumText text;
  for (const Component& c : spectrum.components()) {
    if (c.file_name.find_first_of("#\n") != std::string::npos) {
      throw UsageError("file name cannot be serialized: " + c.file_name);
    }
    text.spectra += c.file_name + ":" + std::to_string(c.line_number);
    if (c.method) {
      text.spectra += "#" + c.method->name + "@" +
                      std::to_string(c.method->start_line) + "-" +
                      std::to_string(c.method->end_line);
    }
    text.spectra += '\n';
  }
  const auto& tests = spectrum.tests();
  for (std::size_t t = 0; t < tests.size(); ++t) {
    text.tests += tests[t].test_id + (tests[t].passed ? ",+\n" : ",-\n");
    for (std::size_t c = 0; c < spectrum.num_components(); ++c) {
      text.matrix += spectrum.covers(t, c) ? "1 " : "0 ";
    }
    text.matrix += tests[t].passed ? "+\n" : "-\n";
  }
  return text;
}

void SaveSpectrum(const CoverageSpectrum& spectrum,
                  const SpectrumPaths& paths) {
  SpectrumText text = SerializeSpectrum(spectrum);
  WriteFile(paths.matrix, text.matrix);
  WriteFile(paths.spectra, text.spectra);
  WriteFile(paths.tests, text.tests);
}

namespace {

std::size_t LineOfByte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

// Parses JSON, rejecting duplicate object keys.
json ParseJson(std::string_view text, const std::string& file) {
  std::vector<std::set<std::string>> keys;
  auto callback = [&](int /*depth*/, json::parse_event_t event,
                      json& parsed) -> bool {
    switch (event) {
      case json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key: {
        const std::string& key = parsed.get_ref<const std::string&>();
        if (!keys.back().insert(key).second) {
          throw ParseError(ParseErrorKind::kDuplicateKey, file, 0,
                           "key '" + key + "'");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::kSchema, file, LineOfByte(text, e.byte),
                     e.what());
  }
}

// Schema helper: checks an object's key set and typed field access.
class ObjectReader {
 public:
  ObjectReader(const json& obj, const std::string& file, std::string where,
               std::initializer_list<const char*> required,
               std::initializer_list<const char*> optional = {})
      : obj_(obj), file_(file), where_(std::move(where)) {
    if (!obj.is_object()) Fail("expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
      allowed.insert(k);
      if (!obj.contains(k)) Fail(std::string("missing key '") + k + "'");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& item : obj.items()) {
      if (!allowed.contains(item.key())) {
        Fail("unknown key '" + item.key() + "'");
      }
    }
  }

  bool Has(const char* key) const { return obj_.contains(key); }

  std::string String(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
      Fail(std::string("'") + key + "' must be a non-empty string");
    }
    return v.get<std::string>();
  }

  int Positive(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0 ||
        v.get<long long>() > std::numeric_limits<int>::max()) {
      Fail(std::string("'") + key + "' must be a positive integer");
    }
    return v.get<int>();
  }

  int NonNegative(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() > std::numeric_limits<int>::max()) {
      Fail(std::string("'") + key + "' must be a non-negative integer");
    }
    return v.get<int>();
  }

  double Number(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_number()) Fail(std::string("'") + key + "' must be a number");
    return v.get<double>();
  }

  bool Bool(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_boolean()) Fail(std::string("'") + key + "' must be a boolean");
    return v.get<bool>();
  }

  const json& Array(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_array()) Fail(std::string("'") + key + "' must be an array");
    return v;
  }

  [[noreturn]] void Fail(const std::string& why) const {
    throw ParseError(ParseErrorKind::kSchema, file_, 0, where_ + ": " + why);
  }

  [[noreturn]] void FailEnum(const char* key, const std::string& value,
                             const std::string& valid) const {
    throw ParseError(ParseErrorKind::kUnknownEnumValue, file_, 0,
                     where_ + ": '" + key + "' value '" + value +
                         "' (valid: " + valid + ")");
  }

 private:
  const json& obj_;
  const std::string& file_;
  std::string where_;
};

BugPositionSet TruthFromJson(const json& doc, const std::string& file) {
  ObjectReader root(doc, file, "ground truth", {"bugId", "positions"});
  BugPositionSet truth;
  truth.bug_id = root.String("bugId");
  const json& positions = root.Array("positions");
  if (positions.empty()) root.Fail("'positions' must not be empty");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    ObjectReader p(positions[i], file, "positions[" + std::to_string(i) + "]",
                   {"file", "lines", "methods"});
    BugPosition pos;
    pos.file_name = p.String("file");
    const json& lines = p.Array("lines");
    if (lines.empty()) p.Fail("'lines' must not be empty");
    for (const json& l : lines) {
      if (!l.is_number_integer() || l.get<long long>() <= 0) {
        p.Fail("'lines' must hold positive integers");
      }
      pos.lines.push_back(l.get<int>());
    }
    const json& methods = p.Array("methods");
    for (std::size_t m = 0; m < methods.size(); ++m) {
      ObjectReader mr(methods[m], file,
                      "positions[" + std::to_string(i) + "].methods[" +
                          std::to_string(m) + "]",
                      {"name", "start", "end"});
      MethodSpan span{mr.String("name"), mr.Positive("start"),
                      mr.Positive("end")};
      if (span.end_line < span.start_line) mr.Fail("end before start");
      pos.methods.push_back(std::move(span));
    }
    truth.positions.push_back(std::move(pos));
  }
  return truth;
}

json TruthToJson(const BugPositionSet& truth) {
  json positions = json::array();
  for (const BugPosition& pos : truth.positions) {
    json methods = json::array();
    for (const MethodSpan& m : pos.methods) {
      methods.push_back(
          {{"name", m.name}, {"start", m.start_line}, {"end", m.end_line}});
    }
    positions.push_back(
        {{"file", pos.file_name}, {"lines", pos.lines}, {"methods", methods}});
  }
  return {{"bugId", truth.bug_id}, {"positions", positions}};
}

}  // namespace

BugPositionSet ParseGroundTruth(std::string_view text,
                                const std::string& file) {
  return TruthFromJson(ParseJson(text, file), file);
}

BugPositionSet LoadGroundTruth(const std::filesystem::path& path) {
  return ParseGroundTruth(ReadFile(path), path.string());
}

std::string SerializeGroundTruth(const BugPositionSet& truth) {
  return TruthToJson(truth).dump(2) + "\n";
}

std::vector<ToolResult> ParseToolResults(std::string_view text,
                                         const std::string& file) {
  std::vector<ToolResult> results;
  std::set<std::pair<std::string, std::string>> seen;
  const auto lines = SplitLines(text, file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    const std::size_t a = line.find(',');
    const std::size_t b =
        a == std::string_view::npos ? a : line.find(',', a + 1);
    if (b == std::string_view::npos ||
        line.find(',', b + 1) != std::string_view::npos || a == 0 ||
        b == a + 1 || b + 1 == line.size()) {
      throw ParseError(ParseErrorKind::kMalformedRow, file, i + 1,
                       "expected tool,bugId,outcome");
    }
    ToolResult r;
    r.tool = std::string(line.substr(0, a));
    r.bug_id = std::string(line.substr(a + 1, b - a - 1));
    std::string_view outcome = line.substr(b + 1);
    auto parsed = ParseToolOutcome(outcome);
    if (!parsed) {
      throw ParseError(ParseErrorKind::kUnknownEnumValue, file, i + 1,
                       "outcome '" + std::string(outcome) +
                           "' (valid: correct, plausible, none)");
    }
    r.outcome = *parsed;
    if (!seen.emplace(r.tool, r.bug_id).second) {
      throw ParseError(ParseErrorKind::kDuplicateKey, file, i + 1,
                       r.tool + "," + r.bug_id);
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<ToolResult> LoadToolResults(const std::filesystem::path& path) {
  return ParseToolResults(ReadFile(path), path.string());
}

std::string SerializeToolResults(const std::vector<ToolResult>& results) {
  std::string out;
  for (const ToolResult& r : results) {
    out += r.tool + "," + r.bug_id + "," +
           std::string(ToolOutcomeName(r.outcome)) + "\n";
  }
  return out;
}

RepairScenario ParseScenario(std::string_view text, const std::string& file,
                             const TruthIndex& truths) {
  const json doc = ParseJson(text, file);
  ObjectReader root(doc, file, "scenario",
                    {"bugId", "budget", "rankedList", "oracle"},
                    {"config", "jointEdit"});
  RepairScenario scenario;
  scenario.bug_id = root.String("bugId");
  auto truth = truths.find(scenario.bug_id);
  if (truth == truths.end()) {
    throw ParseError(ParseErrorKind::kReferentialIntegrity, file, 0,
                     "unknown bugId '" + scenario.bug_id + "'");
  }
  scenario.truth = truth->second;
  scenario.budget = root.NonNegative("budget");
  if (root.Has("config")) {
    const std::string name = root.String("config");
    auto config = ParseConfiguration(name);
    if (!config) {
      root.FailEnum("config", name,
                    "normal-fl, file-assumption, method-assumption, "
                    "line-assumption");
    }
    scenario.config = *config;
  }
  if (root.Has("jointEdit")) scenario.joint_edit = root.Bool("jointEdit");

  std::set<Location> listed;
  const json& list = root.Array("rankedList");
  for (std::size_t i = 0; i < list.size(); ++i) {
    ObjectReader e(list[i], file, "rankedList[" + std::to_string(i) + "]",
                   {"file", "line", "score"});
    SuspiciousLine line{e.String("file"), e.Positive("line"),
                        e.Number("score"), static_cast<int>(i) + 1};
    if (!listed.emplace(line.file_name, line.line_number).second) {
      throw ParseError(ParseErrorKind::kDuplicateComponent, file, 0,
                       line.file_name + ":" +
                           std::to_string(line.line_number));
    }
    scenario.ranked_list.push_back(std::move(line));
  }
  const json& oracle = root.Array("oracle");
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    ObjectReader e(oracle[i], file, "oracle[" + std::to_string(i) + "]",
                   {"file", "line", "outcome"});
    Location where{e.String("file"), e.Positive("line")};
    const std::string name = e.String("outcome");
    auto outcome = ParseLocationOutcome(name);
    if (!outcome) {
      e.FailEnum("outcome", name,
                 "no-patch, plausible-only, correct, partial-correct");
    }
    if (!scenario.oracle.emplace(where, *outcome).second) {
      throw ParseError(ParseErrorKind::kDuplicateKey, file, 0,
                       "oracle location " + where.first + ":" +
                           std::to_string(where.second));
    }
  }
  try {
    Validate(scenario);
  } catch (const UsageError& e) {
    throw ParseError(ParseErrorKind::kSchema, file, 0, e.what());
  }
  return scenario;
}

RepairScenario LoadScenario(const std::filesystem::path& path,
                            const TruthIndex& truths) {
  return ParseScenario(ReadFile(path), path.string(), truths);
}

std::string SerializeScenario(const RepairScenario& scenario) {
  json list = json::array();
  for (const SuspiciousLine& l : scenario.ranked_list) {
    list.push_back(
        {{"file", l.file_name}, {"line", l.line_number}, {"score", l.score}});
  }
  json oracle = json::array();
  for (const auto& [where, outcome] : scenario.oracle) {
    oracle.push_back({{"file", where.first},
                      {"line", where.second},
                      {"outcome", LocationOutcomeName(outcome)}});
  }
  json doc = {{"bugId", scenario.bug_id},
              {"budget", scenario.budget},
              {"config", ConfigurationName(scenario.config)},
              {"jointEdit", scenario.joint_edit},
              {"rankedList", list},
              {"oracle", oracle}};
  return doc.dump(2) + "\n";
}

std::set<std::string> ParseBugList(std::string_view text,
                                   const std::string& file) {
  std::set<std::string> bugs;
  const auto lines = SplitLines(text, file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      throw ParseError(ParseErrorKind::kMalformedRow, file, i + 1,
                       "empty bug id");
    }
    if (!bugs.emplace(lines[i]).second) {
      throw ParseError(ParseErrorKind::kDuplicateKey, file, i + 1,
                       std::string(lines[i]));
    }
  }
  return bugs;
}

std::set<std::string> LoadBugList(const std::filesystem::path& path) {
  return ParseBugList(ReadFile(path), path.string());
}

std::string SerializeBugList(const std::set<std::string>& bugs) {
  std::string out;
  for (const std::string& b : bugs) out += b + "\n";
  return out;
}

}  // namespace sbfl
