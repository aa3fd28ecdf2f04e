#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "jd3/diagrams/catalog.hpp"
#include "jd3/diagrams/coordinates.hpp"
#include "jd3/diagrams/hilbert.hpp"
#include "jd3/exact/qmatrix.hpp"
#include "jd3/poly/families.hpp"
#include "jd3/poly/poly.hpp"

// Graded slices of the tet presentation Q[y1,y2,y3] (y4 eliminated) under the
// parity-dependent S4 action, and the spans of the generating families that
// come from the tsq side.

namespace jd3::diagrams {

/// A graded slice.  `basis` lists the degree-L monomials in y1, y2, y3;
/// `span_matrix` rows are coordinates of a spanning set in that basis and
/// `echelon` holds the reduced echelon basis of their row space.
struct SliceSpace {
  unsigned legs = 0;
  Parity parity = Parity::even;
  std::vector<Monomial> basis;
  QMatrix span_matrix;
  QMatrix echelon;
  std::size_t dim = 0;
  std::size_t generators = 0;
};

inline std::size_t monomial_index(unsigned legs, const Monomial& m) { return reduced_monomial_index(legs, m); }
inline std::size_t slice_size(unsigned legs) { return reduced_slice_size(legs); }

constexpr Character character_for(Parity p) noexcept {
  return p == Parity::odd ? Character::sign : Character::trivial;
}

/// Coordinates of a homogeneous degree-L polynomial in y1, y2, y3.
inline std::vector<BigRational> slice_coordinates(const Poly& p, unsigned legs) {
  if (!(p.vars() == reduced_vars())) throw std::invalid_argument("slice_coordinates: polynomial must be in y1,y2,y3");
  std::vector<BigRational> row(slice_size(legs));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != legs) throw std::invalid_argument("slice_coordinates: wrong degree");
    row[monomial_index(legs, t.mono)] = t.coef;
  }
  return row;
}

inline Poly slice_poly(const SliceSpace& s, std::span<const BigRational> row) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) terms.push_back({s.basis[j], row[j]});
  return Poly::from_terms(reduced_vars(), std::move(terms));
}

inline QMatrix echelon_rows(const QMatrix& m, std::size_t* rank_out = nullptr) {
  Echelon e = row_echelon(m);
  if (rank_out) *rank_out = e.rank();
  return std::move(e.reduced);
}

/// The degree-L slice of the tet presentation: the image of the symmetrizer
/// (even L) or skew symmetrizer (odd L) on degree-L polynomials.
inline SliceSpace tet_slice(unsigned legs, Parity parity) {
  trace::touch(trace::Op::tet_slice);
  if (parity != parity_of(legs)) throw std::invalid_argument("tet_slice: parity must equal legs mod 2");
  SliceSpace s;
  s.legs = legs;
  s.parity = parity;
  s.basis = degree_slice_monomials(reduced_vars(), legs);
  const std::size_t n = s.basis.size();
  s.generators = n;
  s.span_matrix = QMatrix(n, n);

  const ReducedS4 group(legs);
  const Character chi = character_for(parity);
  const BigInt order(static_cast<unsigned long>(group.order()));
  IntegerEchelon ech(n);
  std::vector<BigInt> row(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& e : row) e = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      const bool negate = group.character(g, chi) < 0;
      group.for_each_image_term(g, s.basis[r], [&](const Monomial& m, const BigInt& c) {
        BigInt& e = row[monomial_index(legs, m)];
        if (negate)
          e -= c;
        else
          e += c;
      });
    }
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] != 0) s.span_matrix(r, j) = BigRational(row[j], order);
    ech.insert(row);
  }
  Echelon e = ech.reduced();
  s.dim = e.rank();
  s.echelon = std::move(e.reduced);
  return s;
}

// ---------------------------------------------------------------------------
// Generating families in the edge variables x1..x6.

enum class Family {
  psi4,         // (x1^m1 x5^m2 + x1^m2 x5^m1) x4^m3 (-x2)^m4, m1 <= m2
  alternative,  // (x1+x5)^m (x1 x5)^n x4^m3 (-x2)^m4
  eq8,          // (x1 x2)^n x4^a x5^b
};

struct Generator {
  Family family;
  std::array<unsigned, 4> e{};
};

inline std::vector<Generator> generator_family(Family f, unsigned legs) {
  std::vector<Generator> out;
  const unsigned L = legs;
  switch (f) {
    case Family::psi4:
      for (unsigned m1 = 0; 2 * m1 <= L; ++m1)
        for (unsigned m2 = m1; m1 + m2 <= L; ++m2)
          for (unsigned m3 = 0; m1 + m2 + m3 <= L; ++m3) out.push_back({f, {m1, m2, m3, L - m1 - m2 - m3}});
      break;
    case Family::alternative:
      for (unsigned m = 0; m <= L; ++m)
        for (unsigned n = 0; m + 2 * n <= L; ++n)
          for (unsigned m3 = 0; m + 2 * n + m3 <= L; ++m3) out.push_back({f, {m, n, m3, L - m - 2 * n - m3}});
      break;
    case Family::eq8:
      for (unsigned n = 0; 2 * n <= L; ++n)
        for (unsigned a = 0; 2 * n + a <= L; ++a) out.push_back({f, {n, a, L - 2 * n - a, 0}});
      break;
  }
  return out;
}

/// Cached powers of x1..x6, x1+x5 and x1*x5 in a ring R.
template <class R>
class EdgePowers {
public:
  enum : std::size_t { x1, x2, x3, x4, x5, x6, x1_plus_x5, x1_times_x5 };

  explicit EdgePowers(const std::array<R, 6>& x) {
    for (std::size_t i = 0; i < 6; ++i) table_[i].push_back(x[i]);
    table_[x1_plus_x5].push_back(x[0] + x[4]);
    table_[x1_times_x5].push_back(x[0] * x[4]);
  }

  const R& operator()(std::size_t base, unsigned e) {
    auto& t = table_[base];
    if (t.size() == 1) {
      R one = unit_like(t[0]);
      t.insert(t.begin(), std::move(one));
    }
    while (t.size() <= e) t.push_back(t.back() * t[1]);
    return t[e];
  }

private:
  std::array<std::vector<R>, 8> table_;
};

template <class R>
R eval_generator(const Generator& g, EdgePowers<R>& pw) {
  using P = EdgePowers<R>;
  const auto& [e0, e1, e2, e3] = g.e;
  switch (g.family) {
    case Family::psi4: {
      R sym = pw(P::x1, e0) * pw(P::x5, e1);
      if (e0 != e1) sym = sym + pw(P::x1, e1) * pw(P::x5, e0);
      else sym = sym + sym;
      R r = sym * pw(P::x4, e2) * pw(P::x2, e3);
      return e3 % 2 == 0 ? r : R(-r);
    }
    case Family::alternative: {
      R r = pw(P::x1_plus_x5, e0) * pw(P::x1_times_x5, e1) * pw(P::x4, e2) * pw(P::x2, e3);
      return e3 % 2 == 0 ? r : R(-r);
    }
    case Family::eq8:
      return pw(P::x1, e0) * pw(P::x2, e0) * pw(P::x4, e1) * pw(P::x5, e2);
  }
  throw std::logic_error("eval_generator: unknown family");
}

/// x1..x6 as polynomials in y1, y2, y3.
inline std::array<Poly, 6> reduced_x_images() {
  const auto full = x_images_in_y();
  std::array<Poly, 6> out{Poly(reduced_vars()), Poly(reduced_vars()), Poly(reduced_vars()),
                          Poly(reduced_vars()), Poly(reduced_vars()), Poly(reduced_vars())};
  for (std::size_t i = 0; i < 6; ++i) out[i] = reduce_mod_sum(full[i]);
  return out;
}

inline Poly generator_poly(const Generator& g) {
  EdgePowers<Poly> pw(reduced_x_images());
  return eval_generator(g, pw);
}

// ---------------------------------------------------------------------------
// Images of a generating family inside a slice.
//
// Symbolic route: skew-symmetrize every generator as a polynomial.
//
// Evaluation route: every symmetrized generator lies in the ambient slice A.
// Points p_1..p_D are chosen so that E = [B_j(p_i)] is invertible for the
// echelon basis B of A; then f -> (f(p_i)) is injective on A, the rank of the
// value matrix equals the rank of the image, and coordinates are recovered
// as E^{-1} v.  Values are computed exactly from the x-images scaled by 4.

/// Evaluation points that separate the ambient slice.
struct EvaluationFrame {
  std::vector<std::array<BigInt, 3>> points;
  QMatrix values;   // values(i, j) = B_j(p_i)
  QMatrix inverse;  // values^{-1}
};

inline BigRational evaluate_reduced(const SliceSpace& s, std::span<const BigRational> row,
                                    const std::array<BigInt, 3>& p) {
  mpq_class acc = 0;
  BigInt mono;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    const Monomial& m = s.basis[j];
    BigInt v = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      mpz_pow_ui(mono.get_mpz_t(), p[i].get_mpz_t(), m[i]);
      v *= mono;
    }
    acc += row[j].raw() * mpq_class(v);
  }
  return BigRational(acc);
}

inline EvaluationFrame make_frame(const SliceSpace& ambient) {
  EvaluationFrame f;
  const std::size_t d = ambient.dim;
  f.values = QMatrix(0, d);
  if (d == 0) {
    f.inverse = QMatrix(0, 0);
    return f;
  }
  std::mt19937_64 rng(0x6a6433ULL + ambient.legs);
  IntegerEchelon ech(d);
  std::size_t attempts = 0;
  while (ech.rank() < d) {
    if (++attempts > 100 * d + 100) throw std::runtime_error("make_frame: no separating points found");
    std::array<BigInt, 3> p;
    for (auto& c : p) c = static_cast<long>(rng() % 61) - 30;
    std::vector<BigRational> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = evaluate_reduced(ambient, ambient.echelon.row(j), p);
    if (ech.insert(std::span<const BigRational>(row))) {
      f.points.push_back(p);
      f.values.append_row(row);
    }
  }
  f.inverse = inverse(f.values);
  return f;
}

inline SliceSpace image_by_evaluation(Family family, const SliceSpace& ambient) {
  SliceSpace s;
  s.legs = ambient.legs;
  s.parity = ambient.parity;
  s.basis = ambient.basis;
  s.span_matrix = QMatrix(0, ambient.basis.size());
  s.echelon = QMatrix(0, ambient.basis.size());
  const auto gens = generator_family(family, ambient.legs);
  s.generators = gens.size();
  const std::size_t d = ambient.dim;
  if (d == 0) return s;

  const EvaluationFrame frame = make_frame(ambient);
  const ReducedS4 group(0);
  const Character chi = character_for(ambient.parity);
  const auto x_images = x_images_in_y();

  // One power cache per (point, group element), holding 4 * x_i at tau(p).
  std::vector<EdgePowers<BigInt>> caches;
  std::vector<int> signs;
  caches.reserve(d * group.order());
  for (const auto& p : frame.points) {
    const std::array<BigRational, 4> y{p[0], p[1], p[2], BigRational(BigInt(-(p[0] + p[1] + p[2])))};
    for (std::size_t g = 0; g < group.order(); ++g) {
      const auto& perm = group.element(g).perm;
      std::array<BigRational, 4> q;
      for (std::size_t i = 0; i < 4; ++i) q[i] = y[perm[i]];
      std::array<BigInt, 6> x;
      for (std::size_t i = 0; i < 6; ++i) {
        const BigRational v = evaluate<BigRational>(x_images[i], q, BigRational(1)) * BigRational(4);
        x[i] = v.numerator();
      }
      caches.emplace_back(x);
      signs.push_back(group.character(g, chi));
    }
  }

  const std::size_t per_point = group.order();
  IntegerEchelon ech(d);
  std::vector<std::vector<BigInt>> kept;
  std::vector<BigInt> v(d);
  for (const auto& gen : gens) {
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = 0;
      for (std::size_t g = 0; g < per_point; ++g) {
        const BigInt val = eval_generator(gen, caches[i * per_point + g]);
        if (signs[i * per_point + g] < 0)
          v[i] -= val;
        else
          v[i] += val;
      }
    }
    if (ech.insert(v)) kept.push_back(v);
    if (ech.rank() == d) break;  // the image already fills the ambient slice
  }

  // Back to monomial coordinates: true values are v / (24 * 4^L).
  const BigRational scale(BigInt(1), BigInt(24) * pow(BigInt(4), ambient.legs));
  const std::size_t n = ambient.basis.size();
  for (const auto& kv : kept) {
    std::vector<BigRational> coords(d);
    for (std::size_t j = 0; j < d; ++j) {
      BigRational c;
      for (std::size_t i = 0; i < d; ++i)
        if (kv[i] != 0) c += frame.inverse(j, i) * BigRational(kv[i]);
      coords[j] = c * scale;
    }
    std::vector<BigRational> row(n);
    for (std::size_t j = 0; j < d; ++j)
      if (!coords[j].is_zero())
        for (std::size_t c = 0; c < n; ++c)
          if (!ambient.echelon(j, c).is_zero()) row[c] += coords[j] * ambient.echelon(j, c);
    s.span_matrix.append_row(row);
  }
  s.echelon = echelon_rows(s.span_matrix, &s.dim);
  return s;
}

inline SliceSpace image_symbolic(Family family, unsigned legs) {
  SliceSpace s;
  s.legs = legs;
  s.parity = parity_of(legs);
  s.basis = degree_slice_monomials(reduced_vars(), legs);
  s.span_matrix = QMatrix(0, s.basis.size());
  const ReducedS4 group(legs);
  EdgePowers<Poly> pw(reduced_x_images());
  const auto gens = generator_family(family, legs);
  s.generators = gens.size();
  for (const auto& g : gens) {
    const Poly img = group.symmetrize(eval_generator(g, pw), character_for(s.parity));
    s.span_matrix.append_row(slice_coordinates(img, legs));
  }
  s.echelon = echelon_rows(s.span_matrix, &s.dim);
  return s;
}

inline void require_odd(unsigned legs, const char* what) {
  if (legs % 2 == 0) throw std::invalid_argument(std::string(what) + ": legs must be odd");
}

/// Span of the skew-symmetrized psi4 images in the odd slice.
inline SliceSpace psi4_image_slice(const SliceSpace& ambient) {
  trace::touch(trace::Op::psi4_image_slice);
  require_odd(ambient.legs, "psi4_image_slice");
  return image_by_evaluation(Family::psi4, ambient);
}

inline SliceSpace psi4_image_slice(unsigned legs) {
  require_odd(legs, "psi4_image_slice");
  return psi4_image_slice(tet_slice(legs, Parity::odd));
}

/// Span of the skew-symmetrized (x1 x2)^n x4^a x5^b.
inline SliceSpace eq8_span_slice(const SliceSpace& ambient) {
  trace::touch(trace::Op::eq8_span_slice);
  require_odd(ambient.legs, "eq8_span_slice");
  return image_by_evaluation(Family::eq8, ambient);
}

inline SliceSpace eq8_span_slice(unsigned legs) {
  require_odd(legs, "eq8_span_slice");
  return eq8_span_slice(tet_slice(legs, Parity::odd));
}

/// Span of the skew-symmetrized (x1+x5)^m (x1 x5)^n x4^m3 (-x2)^m4.
inline SliceSpace alternative_span_slice(const SliceSpace& ambient) {
  require_odd(ambient.legs, "alternative_span_slice");
  return image_by_evaluation(Family::alternative, ambient);
}

/// Odd slice of the tsq presentation Q[z1..z4]/(z1+z2+z3+z4).  The reflection
/// of the internal graph fixes every z_i and acts by -1 in odd degrees, so
/// the averaging projector (1 + R)/2 is computed and its rank returned.
inline std::size_t tsq_odd_dim(unsigned legs) {
  trace::touch(trace::Op::tsq_odd_dim);
  require_odd(legs, "tsq_odd_dim");
  const auto basis = degree_slice_monomials(reduced_z_vars(), legs);
  const std::size_t n = basis.size();
  const BigRational reflection_sign = -1;
  QMatrix projector(n, n);
  const BigRational half(BigInt(1), BigInt(2));
  for (std::size_t i = 0; i < n; ++i) projector(i, i) = (BigRational(1) + reflection_sign) * half;
  return rank(projector);
}

// ---------------------------------------------------------------------------
// The odd slice described through symmetric functions.

inline Poly reduced_discriminant() { return reduce_mod_sum(discriminant(y_vars())); }

inline Poly reduced_sigma(std::size_t i) { return reduce_mod_sum(elementary_symmetric(i, y_vars())); }

/// Rows Delta sigma3 sigma2^n sigma3^(2m) sigma4^k with 2n + 6m + 4k = L - 9.
inline QMatrix odd_target_span(unsigned legs) {
  require_odd(legs, "odd_target_span");
  QMatrix m(0, slice_size(legs));
  if (legs < 9) return m;
  const Poly base = reduced_discriminant() * reduced_sigma(3);
  const Poly s2 = reduced_sigma(2), s3sq = pow(reduced_sigma(3), 2), s4 = reduced_sigma(4);
  const unsigned rest = legs - 9;
  for (unsigned mm = 0; 6 * mm <= rest; ++mm)
    for (unsigned k = 0; 6 * mm + 4 * k <= rest; ++k) {
      const unsigned n = (rest - 6 * mm - 4 * k) / 2;
      const Poly p = base * pow(s2, n) * pow(s3sq, mm) * pow(s4, k);
      m.append_row(slice_coordinates(p, legs));
    }
  return m;
}

/// True iff every echelon row of the slice is divisible by Delta and the
/// quotient is divisible by sigma3.
inline bool divisible_by_delta_sigma3(const SliceSpace& s) {
  const Poly delta = reduced_discriminant();
  const Poly s3 = reduced_sigma(3);
  for (std::size_t r = 0; r < s.echelon.rows(); ++r) {
    try {
      const Poly p = slice_poly(s, s.echelon.row(r));
      const Poly q = divide_exact(divide_exact(p, delta), s3);
      if (!(q * delta * s3 == p)) return false;
    } catch (const std::domain_error&) {
      return false;
    }
  }
  return true;
}

}  // namespace jd3::diagrams
