// Line-oriented `key: value` verification reports.
#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace delzant {

class Report {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }

  // Records a checked line; a false `ok` marks the line and fails the report.
  void check(bool ok, std::string key, std::string value = {}) {
    if (!ok) {
      passed_ = false;
      value += value.empty() ? "FAIL" : " FAIL";
    } else if (value.empty()) {
      value = "ok";
    }
    add(std::move(key), std::move(value));
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& [k, v] : other.lines_) add(prefix + k, v);
    passed_ = passed_ && other.passed_;
  }

  bool passed() const { return passed_; }
  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }

  void write(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << ": " << v << '\n';
    out << "result: " << (passed_ ? "pass" : "fail") << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  bool passed_ = true;
};

}  // namespace delzant
