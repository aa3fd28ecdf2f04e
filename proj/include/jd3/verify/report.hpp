#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace jd3::verify {

using Params = std::vector<std::pair<std::string, std::string>>;

struct CheckRecord {
  std::string id;
  Params params;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0.0;

  /// "k=v;k=v" in insertion order.
  [[nodiscard]] std::string params_string() const {
    std::string s;
    for (const auto& [k, v] : params) {
      if (!s.empty()) s += ';';
      s += k + "=" + v;
    }
    return s;
  }
};

/// Builds a record whose pass flag is the exact comparison of the two
/// canonical renderings.
inline CheckRecord make_check(std::string id, Params params, std::string expected, std::string actual,
                              double elapsed_ms = 0.0) {
  CheckRecord r{std::move(id), std::move(params), std::move(expected), std::move(actual), false, elapsed_ms};
  r.pass = r.expected == r.actual;
  return r;
}

inline std::string render(bool b) { return b ? "true" : "false"; }

/// Orders strings so that embedded decimal numbers compare by value:
/// "L=9" < "L=11".
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;  // tie-break on leading zeros
}

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

class Report {
public:
  explicit Report(std::string suite = "") : suite_(std::move(suite)) {}

  void add(CheckRecord r) { checks_.push_back(std::move(r)); }

  void merge(Report other) {
    for (auto& c : other.checks_) checks_.push_back(std::move(c));
  }

  /// Sorts by id, then params, both in natural order.
  void sort() {
    std::stable_sort(checks_.begin(), checks_.end(), [](const CheckRecord& x, const CheckRecord& y) {
      if (x.id != y.id) return natural_less(x.id, y.id);
      return natural_less(x.params_string(), y.params_string());
    });
  }

  [[nodiscard]] const std::string& suite() const noexcept { return suite_; }
  [[nodiscard]] const std::vector<CheckRecord>& checks() const noexcept { return checks_; }

  [[nodiscard]] Summary summary() const {
    Summary s;
    s.total = checks_.size();
    s.passed = static_cast<std::size_t>(std::ranges::count_if(checks_, [](const auto& c) { return c.pass; }));
    s.failed = s.total - s.passed;
    return s;
  }

  [[nodiscard]] bool all_passed() const { return summary().failed == 0; }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.params) params[k] = v;
      j["checks"].push_back({{"id", c.id},
                             {"params", params},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"pass", c.pass},
                             {"elapsed_ms", std::round(c.elapsed_ms * 1000.0) / 1000.0}});
    }
    const Summary s = summary();
    j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
    return j;
  }

  void write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

  void write_csv(std::ostream& os) const {
    os << "id,params,expected,actual,pass\n";
    for (const auto& c : checks_)
      os << csv_field(c.id) << ',' << csv_field(c.params_string()) << ',' << csv_field(c.expected) << ','
         << csv_field(c.actual) << ',' << render(c.pass) << '\n';
  }

  /// Table for terminals; values longer than kTextWidth are elided.
  void write_text(std::ostream& os) const {
    std::size_t wid = 2, wexp = 8, wact = 6;
    for (const auto& c : checks_) {
      wid = std::max(wid, c.id.size());
      wexp = std::max(wexp, elide(c.expected).size());
      wact = std::max(wact, elide(c.actual).size());
    }
    os << std::left << std::setw(static_cast<int>(wid)) << "id" << "  " << std::setw(static_cast<int>(wexp))
       << "expected" << "  " << std::setw(static_cast<int>(wact)) << "actual" << "  result\n";
    for (const auto& c : checks_)
      os << std::setw(static_cast<int>(wid)) << c.id << "  " << std::setw(static_cast<int>(wexp)) << elide(c.expected)
         << "  " << std::setw(static_cast<int>(wact)) << elide(c.actual) << "  " << (c.pass ? "PASS" : "FAIL") << '\n';
    const Summary s = summary();
    os << suite_ << ": " << s.passed << "/" << s.total << " passed, " << s.failed << " failed\n";
  }

  static constexpr std::size_t kTextWidth = 48;

  static std::string elide(const std::string& v) {
    return v.size() <= kTextWidth ? v : v.substr(0, kTextWidth - 3) + "...";
  }

  static std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
    std::string out = "\"";
    for (char ch : v) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
};

}  // namespace jd3::verify
