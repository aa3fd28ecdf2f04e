#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jd3/exact/big_rational.hpp"
#include "jd3/poly/monomial.hpp"
#include "jd3/trace.hpp"

namespace jd3 {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = INT_MIN;

struct Term {
  Monomial mono;
  BigRational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over Q.  Terms are stored in descending graded-lex
/// order with no zero coefficients, so the leading term is terms().front().
class Poly {
public:
  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

  static Poly constant(VarSet vars, const BigRational& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Poly variable(VarSet vars, std::size_t i) {
    if (i >= vars.size()) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(std::move(vars));
    p.terms_.push_back({Monomial::variable(i), BigRational(1)});
    return p;
  }

  static Poly variable(const VarSet& vars, std::string_view name) { return variable(vars, vars.index_of(name)); }

  static Poly monomial(VarSet vars, const Monomial& m, const BigRational& c = 1) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from arbitrary terms; duplicates are merged.
  static Poly from_terms(VarSet vars, std::vector<Term> terms) {
    Poly p(std::move(vars));
    std::ranges::sort(terms, [](const Term& a, const Term& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coef += t.coef;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  [[nodiscard]] const VarSet& vars() const noexcept { return vars_; }
  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const Term& leading() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return terms_.front();
  }

  /// Total degree; kZeroDegree for the zero polynomial.
  [[nodiscard]] int degree() const noexcept {
    return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.front().mono.degree());
  }

  [[nodiscard]] bool is_homogeneous() const noexcept {
    return terms_.empty() || terms_.back().mono.degree() == terms_.front().mono.degree();
  }

  [[nodiscard]] BigRational coefficient(const Monomial& m) const {
    const auto it = std::ranges::lower_bound(terms_, m, std::greater<>{}, &Term::mono);
    return (it != terms_.end() && it->mono == m) ? it->coef : BigRational(0);
  }

  /// Highest exponent of variable i occurring in the polynomial.
  [[nodiscard]] unsigned degree_in(std::size_t i) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[i]);
    return d;
  }

  Poly& operator+=(const Poly& o) { return merge(o, false); }
  Poly& operator-=(const Poly& o) { return merge(o, true); }

  Poly& operator*=(const BigRational& c) {
    trace::touch(trace::Op::scale);
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
  friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    trace::touch(trace::Op::mul);
    require_same_vars(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.vars_);
    if (a.size() == 1 || b.size() == 1) {
      const Poly& big = a.size() == 1 ? b : a;
      const Term& t = a.size() == 1 ? a.terms_.front() : b.terms_.front();
      Poly r(a.vars_);
      r.terms_.reserve(big.size());
      for (const auto& u : big.terms_) r.terms_.push_back({u.mono * t.mono, u.coef * t.coef});
      return r;  // multiplying by a monomial keeps the order
    }
    std::unordered_map<Monomial, BigRational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    mpq_class prod;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        mpq_mul(prod.get_mpq_t(), s.coef.raw().get_mpq_t(), t.coef.raw().get_mpq_t());
        auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
        if (fresh)
          it->second = BigRational(prod);
        else
          it->second += BigRational(prod);
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms.push_back({m, std::move(c)});
    Poly r(a.vars_);
    std::ranges::sort(terms, [](const Term& x, const Term& y) { return x.mono > y.mono; });
    r.terms_ = std::move(terms);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      BigRational c = t.coef;
      if (k == 0) {
        if (c.sign() < 0) s += "-";
      } else {
        s += c.sign() < 0 ? " - " : " + ";
      }
      if (c.sign() < 0) c = -c;
      bool printed = false;
      if (t.mono.degree() == 0 || c != BigRational(1)) {
        s += c.to_string();
        printed = true;
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const unsigned e = t.mono[i];
        if (e == 0) continue;
        if (printed) s += "*";
        printed = true;
        s += vars_.name(i);
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  static void require_same_vars(const Poly& a, const Poly& b) {
    if (!(a.vars_ == b.vars_)) throw std::invalid_argument("Poly: variable sets differ");
  }

private:
  Poly& merge(const Poly& o, bool negate) {
    trace::touch(trace::Op::add);
    require_same_vars(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->mono > i->mono) {
        out.push_back({j->mono, negate ? -j->coef : j->coef});
        ++j;
      } else {
        BigRational c = negate ? i->coef - j->coef : i->coef + j->coef;
        if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  VarSet vars_;
  std::vector<Term> terms_;
};

inline Poly unit_like(const Poly& p) { return Poly::constant(p.vars(), 1); }

/// Generic power by repeated squaring for any commutative ring type that
/// provides unit_like().
template <class R>
R power(const R& base, unsigned e) {
  R result = unit_like(base);
  R b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

inline Poly pow(const Poly& base, unsigned e) { return power(base, e); }

/// Evaluates p with variable i replaced by images[i] inside ring R.  `unit` is
/// the multiplicative identity of R.  Powers of each image are cached.
template <class R>
R evaluate(const Poly& p, std::span<const R> images, const R& unit) {
  if (images.size() != p.vars().size()) throw std::invalid_argument("evaluate: wrong number of images");
  std::vector<std::vector<R>> powers(images.size());
  auto image_pow = [&](std::size_t i, unsigned e) -> const R& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(unit);
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  R acc = unit * BigRational(0);
  for (const auto& t : p.terms()) {
    R term = unit * t.coef;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i] > 0) term = term * image_pow(i, t.mono[i]);
    acc = acc + term;
  }
  return acc;
}

/// Substitutes variable i of p by images[i]; all images share one VarSet.
inline Poly substitute(const Poly& p, std::span<const Poly> images) {
  trace::touch(trace::Op::substitute);
  if (images.size() != p.vars().size()) throw std::invalid_argument("substitute: wrong number of images");
  if (images.empty()) return p;
  const VarSet& target = images.front().vars();
  for (const auto& im : images)
    if (!(im.vars() == target)) throw std::invalid_argument("substitute: images use different variable sets");
  return evaluate<Poly>(p, images, Poly::constant(target, 1));
}

/// Substitution by variable name.  Every variable occurring in p must be
/// mapped; variables absent from p may be left out.
inline Poly substitute(const Poly& p, const std::map<std::string, Poly>& images) {
  if (images.empty()) {
    if (p.degree() > 0) throw std::invalid_argument("substitute: empty map for non-constant polynomial");
    return p;
  }
  const VarSet& target = images.begin()->second.vars();
  std::vector<Poly> positional;
  positional.reserve(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    const auto it = images.find(p.vars().name(i));
    if (it != images.end()) {
      positional.push_back(it->second);
    } else if (p.degree_in(i) > 0) {
      throw std::invalid_argument("substitute: variable " + p.vars().name(i) + " is not mapped");
    } else {
      positional.emplace_back(target);
    }
  }
  return substitute(p, positional);
}

/// Exact quotient p / d by graded-lex leading-term division.  Throws
/// std::domain_error when d does not divide p.
inline Poly divide_exact(const Poly& p, const Poly& d) {
  trace::touch(trace::Op::divide_exact);
  Poly::require_same_vars(p, d);
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  const Term lead = d.leading();
  std::vector<Term> quotient;
  Poly rem = p;
  while (!rem.is_zero()) {
    const Term& t = rem.leading();
    if (!lead.mono.divides(t.mono)) throw std::domain_error("divide_exact: divisor does not divide polynomial");
    const Term q{t.mono / lead.mono, t.coef / lead.coef};
    rem -= Poly::monomial(p.vars(), q.mono, q.coef) * d;
    quotient.push_back(q);
  }
  return Poly::from_terms(p.vars(), std::move(quotient));
}

}  // namespace jd3
