#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jd3 {

inline constexpr std::size_t kMaxVars = 8;

/// Ordered list of variable names.  Copies share storage; two sets compare
/// equal when their names agree position by position.
class VarSet {
public:
  VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

  explicit VarSet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->size() > kMaxVars) throw std::invalid_argument("VarSet: too many variables");
    for (std::size_t i = 0; i < names_->size(); ++i)
      for (std::size_t j = i + 1; j < names_->size(); ++j)
        if ((*names_)[i] == (*names_)[j]) throw std::invalid_argument("VarSet: duplicate name " + (*names_)[i]);
  }

  [[nodiscard]] std::size_t size() const noexcept { return names_->size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_->at(i); }
  [[nodiscard]] std::span<const std::string> names() const noexcept { return *names_; }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
    const auto it = std::ranges::find(*names_, name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }

  [[nodiscard]] std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("VarSet: unknown variable " + std::string(name));
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector.  Ordered graded-lexicographically: total degree first,
/// then the exponent of the earliest variable.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many exponents");
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial from_span(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many exponents");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  [[nodiscard]] unsigned operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] unsigned degree() const noexcept { return deg_; }

  void set(std::size_t i, unsigned e) {
    deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + e);
    e_[i] = static_cast<std::uint16_t>(e);
  }

  [[nodiscard]] bool divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    a.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return a;
  }

  /// Requires b.divides(a).
  friend Monomial operator/(Monomial a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    a.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
    return a;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : e_) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }

private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree d in `nvars` variables, in descending
/// graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_span(e));
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace jd3
