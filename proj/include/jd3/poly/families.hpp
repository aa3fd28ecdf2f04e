#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "jd3/poly/poly.hpp"
#include "jd3/poly/signed_action.hpp"

// Symmetric functions and the P2/P3/P4/Q families over S4 acting on y1..y4.

namespace jd3 {

/// y1, y2, y3, y4: the face variables of the tetrahedron.
inline const VarSet& y_vars() {
  static const VarSet vs{"y1", "y2", "y3", "y4"};
  return vs;
}

inline std::array<Poly, 4> y_generators() {
  return {Poly::variable(y_vars(), 0), Poly::variable(y_vars(), 1), Poly::variable(y_vars(), 2),
          Poly::variable(y_vars(), 3)};
}

inline std::vector<Monomial> degree_slice_monomials(const VarSet& vars, unsigned d) {
  trace::touch(trace::Op::degree_slice_monomials);
  return monomials_of_degree(vars.size(), d);
}

/// sigma_i: sum of all squarefree monomials of degree i.
inline Poly elementary_symmetric(std::size_t i, const VarSet& vars) {
  trace::touch(trace::Op::elementary_symmetric);
  if (i < 1 || i > vars.size()) throw std::invalid_argument("elementary_symmetric: index out of range");
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(vars.size(), static_cast<unsigned>(i))) {
    bool squarefree = true;
    for (std::size_t v = 0; v < vars.size(); ++v) squarefree = squarefree && m[v] <= 1;
    if (squarefree) terms.push_back({m, BigRational(1)});
  }
  return Poly::from_terms(vars, std::move(terms));
}

/// Delta = prod_{i<j} (y_i - y_j) over four variables.
inline Poly discriminant(const VarSet& vars) {
  trace::touch(trace::Op::discriminant);
  if (vars.size() != 4) throw std::invalid_argument("discriminant: needs exactly four variables");
  Poly d = Poly::constant(vars, 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) d = d * (Poly::variable(vars, i) - Poly::variable(vars, j));
  return d;
}

// P2, P3, P4 are written over any commutative ring so the same definitions
// serve symbolic polynomials, numeric evaluation and t-expansions.

template <class R>
R p2(const R& a, const R& b, const R& c) {
  trace::touch(trace::Op::p2);
  const R ab = a - b, bc = b - c, ca = c - a;
  return ab * ab + bc * bc + ca * ca;
}

template <class R>
R p3(const R& a, const R& b, const R& c) {
  trace::touch(trace::Op::p3);
  return (a - b) * (b - c) * (c - a);
}

template <class R>
R p4(const R& a, const R& b, const R& c, const R& d) {
  trace::touch(trace::Op::p4);
  return (a - c) * (b - c) * (a - d) * (b - d);
}

inline Poly p2(std::span<const Poly> args) {
  if (args.size() != 3) throw std::invalid_argument("p2: needs exactly three arguments");
  return p2(args[0], args[1], args[2]);
}

inline Poly p3(std::span<const Poly> args) {
  if (args.size() != 3) throw std::invalid_argument("p3: needs exactly three arguments");
  return p3(args[0], args[1], args[2]);
}

inline Poly p4(std::span<const Poly> args) {
  if (args.size() != 4) throw std::invalid_argument("p4: needs exactly four arguments");
  return p4(args[0], args[1], args[2], args[3]);
}

/// Q^{n,m,k}: the four cyclically placed P2^n P3^(2m+3) products times the
/// three-term sum of P4^k, evaluated at y = (y1, y2, y3, y4) in ring R.
template <class R>
R q_poly(unsigned n, unsigned m, unsigned k, const std::array<R, 4>& y) {
  trace::touch(trace::Op::q_poly);
  const auto& [y1, y2, y3, y4] = y;
  const unsigned odd = 2 * m + 3;
  auto block = [&](const R& a, const R& b, const R& c) { return power(p2(a, b, c), n) * power(p3(a, b, c), odd); };
  const R first = block(y1, y2, y3) + block(y4, y3, y2) + block(y3, y4, y1) + block(y2, y1, y4);
  const R second = power(p4(y1, y2, y3, y4), k) + power(p4(y1, y3, y2, y4), k) + power(p4(y1, y4, y2, y3), k);
  return first * second;
}

inline Poly q_poly(unsigned n, unsigned m, unsigned k) { return q_poly<Poly>(n, m, k, y_generators()); }

/// Degree of Q^{n,m,k}: 2n + 6m + 4k + 9.
constexpr unsigned q_degree(unsigned n, unsigned m, unsigned k) { return 2 * n + 6 * m + 4 * k + 9; }

}  // namespace jd3
