#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "jd3/exact/big_rational.hpp"
#include "jd3/poly/families.hpp"
#include "jd3/poly/poly.hpp"

namespace jd3::asym {

/// Exponent alpha*a + beta*b + gamma*c of a generalized monomial t^(...).
struct ExpVector {
  long alpha = 0;
  long beta = 0;
  long gamma = 0;

  friend ExpVector operator+(const ExpVector& x, const ExpVector& y) {
    return {x.alpha + y.alpha, x.beta + y.beta, x.gamma + y.gamma};
  }
  friend bool operator==(const ExpVector&, const ExpVector&) = default;
  friend auto operator<=>(const ExpVector&, const ExpVector&) = default;

  /// e.g. "6a+2b+c", "-a+b", "0".
  [[nodiscard]] std::string to_string() const {
    std::string s;
    auto part = [&](long k, char sym) {
      if (k == 0) return;
      if (k < 0) s += "-";
      else if (!s.empty()) s += "+";
      const long mag = k < 0 ? -k : k;
      if (mag != 1) s += std::to_string(mag);
      s += sym;
    };
    part(alpha, 'a');
    part(beta, 'b');
    part(gamma, 'c');
    return s.empty() ? "0" : s;
  }
};

enum class RegimeId { one, two };

inline std::string regime_name(RegimeId id) { return id == RegimeId::one ? "one" : "two"; }

/// An exact choice of (a, b, c) satisfying one of the two orderings used for
/// the leading-term analysis:
///   one: a > b > c > 0 and a-b < b-c < 2(a-b)
///   two: a > b > c > 0 and b-c < a-b < 2(b-c)
class Regime {
public:
  Regime(RegimeId id, BigRational a, BigRational b, BigRational c)
      : id_(id), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!satisfied(id_, a_, b_, c_))
      throw std::invalid_argument("Regime " + regime_name(id_) + ": (a,b,c) = (" + a_.to_string() + "," +
                                  b_.to_string() + "," + c_.to_string() + ") violates its inequalities");
  }

  static bool satisfied(RegimeId id, const BigRational& a, const BigRational& b, const BigRational& c) {
    if (!(a > b && b > c && c > BigRational(0))) return false;
    const BigRational ab = a - b, bc = b - c;
    return id == RegimeId::one ? (ab < bc && bc < 2 * ab) : (bc < ab && ab < 2 * bc);
  }

  static Regime default_for(RegimeId id) {
    return id == RegimeId::one ? Regime(id, 2, BigRational(8, 5), 1) : Regime(id, 2, BigRational(7, 5), 1);
  }

  [[nodiscard]] RegimeId id() const noexcept { return id_; }
  [[nodiscard]] const BigRational& a() const noexcept { return a_; }
  [[nodiscard]] const BigRational& b() const noexcept { return b_; }
  [[nodiscard]] const BigRational& c() const noexcept { return c_; }

  [[nodiscard]] BigRational value(const ExpVector& e) const {
    return BigRational(e.alpha) * a_ + BigRational(e.beta) * b_ + BigRational(e.gamma) * c_;
  }

  friend bool operator==(const Regime&, const Regime&) = default;

private:
  RegimeId id_;
  BigRational a_, b_, c_;
};

/// Finite sum of q * t^(alpha a + beta b + gamma c).  Terms are keyed by the
/// exponent's numeric value under the regime, so exponents that coincide as
/// t -> infinity share one coefficient; the lexicographically largest
/// ExpVector is kept as the representative.
class PuiseuxPoly {
public:
  struct Entry {
    ExpVector exponent;
    BigRational coef;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using TermMap = std::map<BigRational, Entry, std::greater<>>;

  explicit PuiseuxPoly(Regime regime) : regime_(std::move(regime)) {}

  static PuiseuxPoly term(const Regime& r, const ExpVector& e, const BigRational& c) {
    PuiseuxPoly p(r);
    p.add_term(e, c);
    return p;
  }

  static PuiseuxPoly constant(const Regime& r, const BigRational& c) { return term(r, {}, c); }

  [[nodiscard]] const Regime& regime() const noexcept { return regime_; }
  /// Terms in descending exponent value.
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const ExpVector& e, const BigRational& c) { add_term(regime_.value(e), e, c); }

  PuiseuxPoly& operator+=(const PuiseuxPoly& o) {
    require_same_regime(o);
    for (const auto& [v, t] : o.terms_) add_term(v, t.exponent, t.coef);
    return *this;
  }
  PuiseuxPoly& operator-=(const PuiseuxPoly& o) {
    require_same_regime(o);
    for (const auto& [v, t] : o.terms_) add_term(v, t.exponent, -t.coef);
    return *this;
  }

  friend PuiseuxPoly operator+(PuiseuxPoly x, const PuiseuxPoly& y) { return x += y; }
  friend PuiseuxPoly operator-(PuiseuxPoly x, const PuiseuxPoly& y) { return x -= y; }
  friend PuiseuxPoly operator-(PuiseuxPoly x) {
    for (auto& [v, t] : x.terms_) t.coef = -t.coef;
    return x;
  }
  friend PuiseuxPoly operator*(PuiseuxPoly x, const BigRational& c) {
    if (c.is_zero()) x.terms_.clear();
    for (auto& [v, t] : x.terms_) t.coef *= c;
    return x;
  }

  friend PuiseuxPoly operator*(const PuiseuxPoly& x, const PuiseuxPoly& y) {
    x.require_same_regime(y);
    PuiseuxPoly r(x.regime_);
    for (const auto& [v1, t1] : x.terms_)
      for (const auto& [v2, t2] : y.terms_) r.add_term(v1 + v2, t1.exponent + t2.exponent, t1.coef * t2.coef);
    return r;
  }

  /// Compares exponent values and coefficients; the representative
  /// ExpVector depends on summation order and is ignored.
  friend bool operator==(const PuiseuxPoly& x, const PuiseuxPoly& y) {
    return x.regime_ == y.regime_ &&
           std::ranges::equal(x.terms_, y.terms_, [](const auto& s, const auto& t) {
             return s.first == t.first && s.second.coef == t.second.coef;
           });
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [v, t] : terms_) {
      if (!s.empty()) s += " + ";
      s += t.coef.to_string() + "*t^(" + t.exponent.to_string() + ")";
    }
    return s;
  }

private:
  void add_term(const BigRational& value, const ExpVector& e, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(value, Entry{e, c});
    if (fresh) return;
    it->second.coef += c;
    if (it->second.exponent < e) it->second.exponent = e;
    if (it->second.coef.is_zero()) terms_.erase(it);
  }

  void require_same_regime(const PuiseuxPoly& o) const {
    if (!(regime_ == o.regime_)) throw std::invalid_argument("PuiseuxPoly: regimes differ");
  }

  Regime regime_;
  TermMap terms_;
};

inline PuiseuxPoly unit_like(const PuiseuxPoly& p) { return PuiseuxPoly::constant(p.regime(), 1); }
inline PuiseuxPoly pow(const PuiseuxPoly& base, unsigned e) { return power(base, e); }

/// Images of y1..y4 as three-term combinations of t^a, t^b, t^c.
inline std::array<PuiseuxPoly, 4> regime_images(const Regime& r) {
  const ExpVector ta{1, 0, 0}, tb{0, 1, 0}, tc{0, 0, 1};
  auto combo = [&](BigRational ca, BigRational cb, BigRational cc) {
    PuiseuxPoly p(r);
    p.add_term(ta, ca);
    p.add_term(tb, cb);
    p.add_term(tc, cc);
    return p;
  };
  const BigRational q(BigInt(1), BigInt(4));
  if (r.id() == RegimeId::one) {
    return {combo(3 * q, -q, -q), combo(-q, 3 * q, -q), combo(-q, -q, 3 * q), combo(-q, -q, -q)};
  }
  const BigRational half(BigInt(1), BigInt(2));
  return {combo(2 * q, half, -q), combo(2 * q, -half, -q), combo(-2 * q, 0, 3 * q), combo(-2 * q, 0, -q)};
}

/// Exact, untruncated substitution of the regime images into p(y1..y4).
inline PuiseuxPoly substitute_regime(const Poly& p, const Regime& r) {
  trace::touch(trace::Op::substitute_regime);
  if (!(p.vars() == y_vars())) throw std::invalid_argument("substitute_regime: polynomial must be in y1..y4");
  const auto images = regime_images(r);
  return evaluate<PuiseuxPoly>(p, images, PuiseuxPoly::constant(r, 1));
}

struct LeadingTerm {
  BigRational coefficient;
  ExpVector exponent;
  BigRational value;  // exponent evaluated at the regime's (a, b, c)

  /// "coef*t^(value)": exact and independent of which ExpVector represents
  /// the merged exponent.
  [[nodiscard]] std::string to_string() const { return coefficient.to_string() + "*t^(" + value.to_string() + ")"; }
};

inline LeadingTerm leading_term(const PuiseuxPoly& p, const Regime& r) {
  trace::touch(trace::Op::leading_term);
  if (!(p.regime() == r)) throw std::invalid_argument("leading_term: polynomial was built under another regime");
  if (p.is_zero()) throw std::domain_error("leading_term: zero polynomial");
  const auto& [value, entry] = *p.terms().begin();
  return {entry.coef, entry.exponent, value};
}

/// Closed-form leading term of Q^{n,m,k} under the regime, with
/// eps = 3 when k = 0 and eps = 1 otherwise.
inline LeadingTerm expected_q_leading(unsigned n, unsigned m, unsigned k, const Regime& r) {
  const long eps = k == 0 ? 3 : 1;
  BigRational coef;
  ExpVector e;
  const long N = n, M = m, K = k;
  if (r.id() == RegimeId::one) {
    coef = BigRational(eps) * pow(BigRational(2), n) * BigRational(2 * M + 3);
    e = {2 * (N + 2 * M + K + 3), 2 * (M + K + 1), 1};
  } else {
    coef = BigRational(eps) * pow(BigRational(2), n + 1) * BigRational(N + 2 * M + 3);
    e = {2 * (N + 2 * M + 2 * K) + 5, 2 * M + 3, 1};
  }
  return {coef, e, r.value(e)};
}

struct AsymptoticCheck {
  bool pass = false;
  LeadingTerm expected;
  LeadingTerm actual;
};

/// Expands Q^{n,m,k} under the regime substitution and compares its leading
/// term with the closed form.  The substitution is applied to y1..y4 before
/// expanding, which equals substitute_regime(q_poly(n, m, k)) because the
/// substitution is a ring homomorphism.
inline AsymptoticCheck check_q_asymptotics(unsigned n, unsigned m, unsigned k, const Regime& r) {
  trace::touch(trace::Op::verify_q_asymptotics);
  const PuiseuxPoly q = q_poly<PuiseuxPoly>(n, m, k, regime_images(r));
  AsymptoticCheck out;
  out.expected = expected_q_leading(n, m, k, r);
  out.actual = leading_term(q, r);
  out.pass = !out.actual.coefficient.is_zero() && out.actual.coefficient == out.expected.coefficient &&
             out.actual.value == out.expected.value;
  return out;
}

inline bool verify_q_asymptotics(unsigned n, unsigned m, unsigned k, const Regime& r) {
  return check_q_asymptotics(n, m, k, r).pass;
}

}  // namespace jd3::asym
