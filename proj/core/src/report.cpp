#include "fremlin/report.hpp"

#include <sstream>

namespace fremlin {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds:
      return "holds";
    case Expectation::Refuted:
      return "refuted";
    case Expectation::Informational:
      return "informational";
  }
  return "?";
}

bool CheckLine::passed() const noexcept {
  switch (expected) {
    case Expectation::Holds:
      return violations == 0;
    case Expectation::Refuted:
      return violations > 0;
    case Expectation::Informational:
      return true;
  }
  return false;
}

void CheckLine::record(bool ok, const std::string& description) {
  check(ok, [&] { return description; });
}

bool Report::passed() const noexcept {
  for (const auto& l : lines)
    if (!l.passed()) return false;
  return true;
}

CheckLine* Report::find(const std::string& id) {
  for (auto& l : lines)
    if (l.id == id) return &l;
  return nullptr;
}

const CheckLine* Report::find(const std::string& id) const {
  for (const auto& l : lines)
    if (l.id == id) return &l;
  return nullptr;
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  auto& arr = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& l : lines) {
    nlohmann::ordered_json j;
    j["id"] = l.id;
    j["statement"] = l.statement;
    j["expected"] = to_string(l.expected);
    j["samples"] = l.samples;
    j["violations"] = l.violations;
    j["status"] = l.passed() ? "pass" : "fail";
    if (!l.witness.empty()) j["witness"] = l.witness;
    if (!l.note.empty()) j["note"] = l.note;
    arr.push_back(std::move(j));
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << (l.passed() ? "PASS  " : "FAIL  ") << l.id << "  " << l.statement << "  [" << to_string(l.expected)
       << ", samples=" << l.samples << ", violations=" << l.violations << "]";
    if (!l.witness.empty()) os << "  witness: " << l.witness;
    os << '\n';
  }
  return os.str();
}

void merge_into(CheckLine& line, const std::vector<SampleOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (!o.counted) continue;
    line.check(o.ok, [&] { return o.witness; });
  }
}

}  // namespace fremlin
