#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "jd3/exact/big_rational.hpp"
#include "jd3/poly/families.hpp"
#include "jd3/poly/poly.hpp"
#include "jd3/poly/signed_action.hpp"

// Edge variables x1..x6 of the tetrahedron, face variables y1..y4, and the
// quotient by y1+y2+y3+y4 realized by eliminating y4.

namespace jd3::diagrams {

inline const VarSet& x_vars() {
  static const VarSet vs{"x1", "x2", "x3", "x4", "x5", "x6"};
  return vs;
}

/// y1, y2, y3: coordinates on the quotient after y4 = -(y1+y2+y3).
inline const VarSet& reduced_vars() {
  static const VarSet vs{"y1", "y2", "y3"};
  return vs;
}

inline const VarSet& z_vars() {
  static const VarSet vs{"z1", "z2", "z3", "z4"};
  return vs;
}

inline const VarSet& reduced_z_vars() {
  static const VarSet vs{"z1", "z2", "z3"};
  return vs;
}

/// The leg relations on the tetrahedron edges:
///   x1 - x2 - x6, x1 - x3 + x5, x4 + x5 + x6.
inline std::array<Poly, 3> edge_relations() {
  auto x = [](std::size_t i) { return Poly::variable(x_vars(), i - 1); };
  return {x(1) - x(2) - x(6), x(1) - x(3) + x(5), x(4) + x(5) + x(6)};
}

/// The face variables as polynomials in the edge variables:
///   y1 = x1 - x5 + x6, y2 = x2 + x4 - x6, y3 = x3 - x4 + x5, y4 = -x1 - x2 - x3.
inline std::array<Poly, 4> y_images_in_x() {
  auto x = [](std::size_t i) { return Poly::variable(x_vars(), i - 1); };
  return {x(1) - x(5) + x(6), x(2) + x(4) - x(6), x(3) - x(4) + x(5), -x(1) - x(2) - x(3)};
}

/// Edge variable x_i (i = 1..6) in face coordinates.  x1, x2, x4, x5 follow
/// the inversion of the face substitution; x3 and x6 are forced by the edge
/// relations.
inline Poly x_from_y(std::size_t i) {
  trace::touch(trace::Op::x_from_y);
  const auto y = y_generators();
  const BigRational quarter(BigInt(1), BigInt(4));
  switch (i) {
    case 1: return (y[0] - y[3]) * quarter;
    case 2: return (y[1] - y[3]) * quarter;
    case 3: return (y[2] - y[3]) * quarter;
    case 4: return (y[1] - y[2]) * quarter;
    case 5: return (y[2] - y[0]) * quarter;
    case 6: return (y[0] - y[1]) * quarter;
    default: throw std::invalid_argument("x_from_y: edge index must be 1..6");
  }
}

inline Poly x_from_y(std::string_view name) { return x_from_y(x_vars().index_of(name) + 1); }

inline std::array<Poly, 6> x_images_in_y() {
  return {x_from_y(1), x_from_y(2), x_from_y(3), x_from_y(4), x_from_y(5), x_from_y(6)};
}

/// Rewrites a polynomial in x1..x6 in face coordinates.  Well defined on the
/// quotient by the edge relations: each relation maps to 0 identically.
inline Poly y_from_x(const Poly& p) {
  trace::touch(trace::Op::y_from_x);
  if (!(p.vars() == x_vars())) throw std::invalid_argument("y_from_x: polynomial must be in x1..x6");
  const auto images = x_images_in_y();
  return substitute(p, images);
}

/// Image of y1..y4 in the quotient ring Q[y1,y2,y3].
inline std::array<Poly, 4> reduced_y_images() {
  const auto& r = reduced_vars();
  const Poly y1 = Poly::variable(r, 0), y2 = Poly::variable(r, 1), y3 = Poly::variable(r, 2);
  return {y1, y2, y3, -(y1 + y2 + y3)};
}

/// Normal form modulo y1+y2+y3+y4 of a polynomial in y1..y4.
inline Poly reduce_mod_sum(const Poly& p) {
  if (!(p.vars() == y_vars())) throw std::invalid_argument("reduce_mod_sum: polynomial must be in y1..y4");
  const auto images = reduced_y_images();
  return substitute(p, images);
}

inline bool congruent_mod_sum(const Poly& p, const Poly& q) { return reduce_mod_sum(p) == reduce_mod_sum(q); }

/// Position of a degree-d monomial in y1, y2, y3 within
/// monomials_of_degree(3, d) (descending graded-lex order).
inline std::size_t reduced_monomial_index(unsigned d, const Monomial& m) {
  const std::size_t a = m[0], b = m[1];
  return (d - a) * (d - a + 1) / 2 + (d - a - b);
}

inline std::size_t reduced_slice_size(unsigned d) { return (static_cast<std::size_t>(d) + 1) * (d + 2) / 2; }

/// S4 acting on Q[y1,y2,y3] = Q[y1..y4]/(y1+y2+y3+y4): an element tau sends
/// y_i to y_tau(i) and the image y4 is re-expanded as -(y1+y2+y3).  Powers of
/// -(y1+y2+y3) are precomputed up to the degree given at construction.
class ReducedS4 {
public:
  struct IntTerm {
    Monomial mono;
    BigInt coef;
  };

  explicit ReducedS4(unsigned max_degree) : group_(symmetric_group(4, Character::sign)) {
    const Poly s = reduced_y_images()[3];
    Poly acc = Poly::constant(reduced_vars(), 1);
    for (unsigned e = 0; e <= max_degree; ++e) {
      std::vector<IntTerm> terms;
      for (const auto& t : acc.terms()) terms.push_back({t.mono, t.coef.numerator()});
      minus_sum_powers_.push_back(std::move(terms));
      acc = acc * s;
    }
  }

  [[nodiscard]] std::size_t order() const noexcept { return group_.size(); }
  [[nodiscard]] const SignedPermAction& element(std::size_t g) const { return group_.at(g); }
  [[nodiscard]] unsigned max_degree() const noexcept {
    return static_cast<unsigned>(minus_sum_powers_.size()) - 1;
  }

  /// Calls sink(monomial, coefficient) for every term of tau_g(mu); the
  /// character is not applied.
  template <class Sink>
  void for_each_image_term(std::size_t g, const Monomial& mu, Sink&& sink) const {
    if (mu.degree() > max_degree()) throw std::invalid_argument("ReducedS4: degree exceeds precomputed range");
    const auto& perm = group_[g].perm;
    Monomial base;
    unsigned to_y4 = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (perm[i] == 3)
        to_y4 = mu[i];
      else
        base.set(perm[i], mu[i]);
    }
    for (const auto& t : minus_sum_powers_[to_y4]) sink(base * t.mono, t.coef);
  }

  [[nodiscard]] Poly apply(std::size_t g, const Poly& p) const {
    if (!(p.vars() == reduced_vars())) throw std::invalid_argument("ReducedS4: polynomial must be in y1,y2,y3");
    std::vector<Term> terms;
    for (const auto& t : p.terms())
      for_each_image_term(g, t.mono, [&](const Monomial& m, const BigInt& c) {
        terms.push_back({m, t.coef * BigRational(c)});
      });
    return Poly::from_terms(reduced_vars(), std::move(terms));
  }

  /// (1/24) sum_tau chi(tau) tau(p) on the quotient ring.  Accumulates in
  /// integers after clearing denominators.
  [[nodiscard]] Poly symmetrize(const Poly& p, Character chi) const {
    trace::touch(trace::Op::symmetrize);
    if (!(p.vars() == reduced_vars())) throw std::invalid_argument("ReducedS4: polynomial must be in y1,y2,y3");
    if (!p.is_homogeneous()) throw std::invalid_argument("symmetrize: polynomial is not homogeneous");
    if (p.is_zero()) return p;
    const unsigned deg = p.leading().mono.degree();
    BigInt den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.raw().get_den_mpz_t());
    std::vector<BigInt> acc(reduced_slice_size(deg));
    BigInt c;
    for (const auto& t : p.terms()) {
      c = t.coef.numerator() * (den / t.coef.denominator());
      for (std::size_t g = 0; g < group_.size(); ++g) {
        const bool negate = chi == Character::sign && group_[g].character < 0;
        for_each_image_term(g, t.mono, [&](const Monomial& m, const BigInt& k) {
          auto* e = acc[reduced_monomial_index(deg, m)].get_mpz_t();
          if (negate)
            mpz_submul(e, c.get_mpz_t(), k.get_mpz_t());
          else
            mpz_addmul(e, c.get_mpz_t(), k.get_mpz_t());
        });
      }
    }
    const BigInt scale = den * static_cast<unsigned long>(group_.size());
    const auto monos = monomials_of_degree(3, deg);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) terms.push_back({monos[i], BigRational(acc[i], scale)});
    return Poly::from_terms(reduced_vars(), std::move(terms));
  }

  [[nodiscard]] int character(std::size_t g, Character chi) const {
    return chi == Character::sign ? group_[g].character : 1;
  }

private:
  std::vector<SignedPermAction> group_;
  std::vector<std::vector<IntTerm>> minus_sum_powers_;
};

}  // namespace jd3::diagrams
