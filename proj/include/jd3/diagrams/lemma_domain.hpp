#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jd3/poly/families.hpp"
#include "jd3/poly/poly.hpp"

// Membership in Q[u, v, w] with u = y1 - y3, v = y2 - y3,
// w = (y1 - y4)(y2 - y4).
//
// Substituting y1 = u + s, y2 = v + s, y3 = s, y4 = e + s turns a
// translation-invariant polynomial into one in u, v, e.  Since
// w = e^2 - (u+v) e + uv is monic of degree 2 in e, repeated division by w
// writes f = sum_i (a_i + b_i e) w^i with a_i, b_i in Q[u,v]; f lies in
// Q[u,v,w] iff every b_i vanishes.

namespace jd3::diagrams {

inline const VarSet& uves_vars() {
  static const VarSet vs{"u", "v", "e", "s"};
  return vs;
}

inline const VarSet& uvw_vars() {
  static const VarSet vs{"u", "v", "w"};
  return vs;
}

struct DomainMembership {
  bool translation_invariant = false;
  bool member = false;
  Poly witness{uvw_vars()};  // f written in u, v, w when member
};

namespace detail {

/// Coefficients of f as a polynomial in variable `var`, lowest power first.
inline std::vector<Poly> coefficients_in(const Poly& f, std::size_t var) {
  std::vector<std::vector<Term>> parts(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const unsigned k = m[var];
    m.set(var, 0);
    parts[k].push_back({m, t.coef});
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(Poly::from_terms(f.vars(), std::move(p)));
  return out;
}

}  // namespace detail

/// Decides whether f(y1..y4) is a polynomial in u, v, w.
inline DomainMembership lemma_domain_membership(const Poly& f) {
  if (!(f.vars() == y_vars())) throw std::invalid_argument("lemma_domain_membership: polynomial must be in y1..y4");
  const auto& V = uves_vars();
  const Poly u = Poly::variable(V, 0), v = Poly::variable(V, 1), e = Poly::variable(V, 2), s = Poly::variable(V, 3);
  const std::array<Poly, 4> images{u + s, v + s, s, e + s};
  const Poly g = substitute(f, images);

  DomainMembership out;
  out.translation_invariant = g.degree_in(3) == 0;
  if (!out.translation_invariant) return out;

  constexpr std::size_t e_var = 2;
  const Poly u_plus_v = u + v, uv = u * v;
  std::vector<Poly> digits;  // a_i, in u, v
  bool member = true;
  Poly rest = g;
  while (!rest.is_zero()) {
    auto c = detail::coefficients_in(rest, e_var);
    // Long division by the monic e^2 - (u+v) e + uv, from the top power down.
    std::vector<Poly> quotient(c.size() > 2 ? c.size() - 2 : 0, Poly(V));
    for (std::size_t j = c.size(); j-- > 2;) {
      const Poly lead = c[j];
      if (lead.is_zero()) continue;
      quotient[j - 2] = lead;
      c[j - 1] += lead * u_plus_v;
      c[j - 2] -= lead * uv;
      c[j] = Poly(V);
    }
    if (c.size() > 1 && !c[1].is_zero()) member = false;
    digits.push_back(c[0]);
    Poly next(V);
    for (std::size_t j = 0; j < quotient.size(); ++j)
      if (!quotient[j].is_zero()) next += quotient[j] * pow(e, static_cast<unsigned>(j));
    rest = next;
  }
  if (!member) return out;

  // Back-substitute in the u, v, e coordinates and rebuild f in u, v, w.
  const Poly w_in_e = (u - e) * (v - e);
  Poly check(V);
  const auto& W = uvw_vars();
  const std::array<Poly, 4> to_uvw{Poly::variable(W, 0), Poly::variable(W, 1), Poly(W), Poly(W)};
  Poly witness(W);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    check += digits[i] * pow(w_in_e, static_cast<unsigned>(i));
    witness += substitute(digits[i], to_uvw) * pow(Poly::variable(W, 2), static_cast<unsigned>(i));
  }
  out.member = check == g;
  if (out.member) out.witness = witness;
  return out;
}

/// 12 P2(y1,y2,y3)^n P3(y1,y2,y3)^(2m+3) P4(y1,y2,y3,y4)^k.
inline Poly lemma_block(unsigned n, unsigned m, unsigned k) {
  const auto y = y_generators();
  return pow(p2(y[0], y[1], y[2]), n) * pow(p3(y[0], y[1], y[2]), 2 * m + 3) * pow(p4(y[0], y[1], y[2], y[3]), k) *
         BigRational(12);
}

}  // namespace jd3::diagrams
