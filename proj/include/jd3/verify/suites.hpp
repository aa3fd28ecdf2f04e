#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jd3/asymptotics/puiseux.hpp"
#include "jd3/diagrams/catalog.hpp"
#include "jd3/diagrams/coordinates.hpp"
#include "jd3/diagrams/hilbert.hpp"
#include "jd3/diagrams/lemma_domain.hpp"
#include "jd3/diagrams/slices.hpp"
#include "jd3/exact/qmatrix.hpp"
#include "jd3/poly/families.hpp"
#include "jd3/poly/signed_action.hpp"
#include "jd3/trace.hpp"
#include "jd3/verify/parallel.hpp"
#include "jd3/verify/report.hpp"

namespace jd3::verify {

struct Config {
  unsigned odd_max_legs = 29;
  unsigned even_max_legs = 30;
  unsigned lemma_max_d = 8;
  unsigned asym_max_d = 6;
  unsigned span_max_legs = 15;
  unsigned threads = 1;
  std::vector<asym::Regime> regimes{asym::Regime::default_for(asym::RegimeId::one),
                                    asym::Regime::default_for(asym::RegimeId::two)};
  std::uint64_t seed = 0x3a10c0ffeeULL;
  bool corrupt_closed_form = false;  // test hook: shifts the closed form by one
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string str(std::uint64_t v) { return std::to_string(v); }

/// mt19937_64 with a platform-independent mapping to ranges.
class PortableRng {
public:
  explicit PortableRng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return g_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  BigRational small_rational() {
    long num = 0;
    while (num == 0) num = between(-9, 9);
    return {BigInt(num), BigInt(between(1, 4))};
  }

private:
  std::mt19937_64 g_;
};

inline Poly random_homogeneous(PortableRng& rng, const VarSet& vars, unsigned degree, std::size_t terms) {
  const auto monos = monomials_of_degree(vars.size(), degree);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) ts.push_back({monos[rng.below(monos.size())], rng.small_rational()});
  return Poly::from_terms(vars, std::move(ts));
}

inline Poly random_poly(PortableRng& rng, const VarSet& vars, unsigned max_degree, std::size_t terms) {
  Poly p(vars);
  for (std::size_t i = 0; i < terms; ++i)
    p += random_homogeneous(rng, vars, static_cast<unsigned>(rng.below(max_degree + 1)), 1);
  return p;
}

// ---------------------------------------------------------------------------

/// Per odd L: ambient dimension, psi4 image rank and quotient dimension, plus
/// the symmetric-function description of the slice and the tsq side.  For
/// L <= span_max_legs the three generating families are compared.
inline Report verify_odd_vanishing(unsigned max_legs, unsigned threads = 1, unsigned span_max_legs = 15) {
  using namespace diagrams;
  std::vector<unsigned> legs;
  for (unsigned L = 1; L <= max_legs; L += 2) legs.push_back(L);
  const auto series = hilbert_coefficients(max_legs, 9);

  auto per_legs = [&](std::size_t i) {
    const unsigned L = legs[i];
    const std::string tag = "L=" + str(L);
    const Params params{{"L", str(L)}};
    std::vector<CheckRecord> out;

    Stopwatch sw;
    const SliceSpace ambient = tet_slice(L, Parity::odd);
    const double t_ambient = sw.ms();
    const auto target = odd_target_dim(L);
    out.push_back(make_check("odd.ambient_dim." + tag, params, str(target), str(ambient.dim), t_ambient));
    out.push_back(make_check("odd.series." + tag, params, str(target), str(series[L])));

    Stopwatch sw_psi;
    const SliceSpace psi = psi4_image_slice(ambient);
    const double t_psi = sw_psi.ms();
    out.push_back(make_check("odd.psi4_rank." + tag, params, str(ambient.dim), str(psi.dim), t_psi));
    out.push_back(make_check("odd.quotient_dim." + tag, params, "0", str(ambient.dim - psi.dim), t_ambient + t_psi));

    Stopwatch sw_tsq;
    out.push_back(make_check("odd.tsq_dim." + tag, params, "0", str(tsq_odd_dim(L)), sw_tsq.ms()));

    Stopwatch sw_target;
    const bool target_span = row_space_equal(odd_target_span(L), ambient.echelon);
    out.push_back(make_check("odd.target_span." + tag, params, "true", render(target_span), sw_target.ms()));

    Stopwatch sw_div;
    out.push_back(
        make_check("odd.divisibility." + tag, params, "true", render(divisible_by_delta_sigma3(ambient)), sw_div.ms()));

    if (L <= span_max_legs) {
      Stopwatch sw_span;
      const SliceSpace eq8 = eq8_span_slice(ambient);
      const SliceSpace alt = alternative_span_slice(ambient);
      const bool eq8_equal = row_space_equal(eq8.span_matrix, psi.span_matrix);
      const bool alt_equal = row_space_equal(alt.span_matrix, psi.span_matrix);
      const double t_span = sw_span.ms();
      out.push_back(make_check("odd.span_equal.eq8." + tag, params, "true", render(eq8_equal), t_span));
      out.push_back(make_check("odd.span_equal.alternative." + tag, params, "true", render(alt_equal), t_span));
    }
    return out;
  };

  Report r("odd");
  for (auto& batch : parallel_map(legs.size(), threads, per_legs))
    for (auto& c : batch) r.add(std::move(c));
  r.sort();
  return r;
}

/// Per even n: symmetrizer rank, closed form and series coefficient agree.
inline Report verify_even_dims(unsigned max_legs, unsigned threads = 1, bool corrupt_closed_form = false) {
  using namespace diagrams;
  std::vector<unsigned> legs;
  for (unsigned n = 0; n <= max_legs; n += 2) legs.push_back(n);
  const auto series = hilbert_coefficients(max_legs);

  auto per_legs = [&](std::size_t i) {
    const unsigned n = legs[i];
    Stopwatch sw;
    const SliceSpace s = tet_slice(n, Parity::even);
    const auto closed = even_closed_form(n) + (corrupt_closed_form ? 1 : 0);
    const std::string c = str(closed);
    return make_check("even.threeway.n=" + str(n), {{"n", str(n)}}, "(" + c + "," + c + "," + c + ")",
                      "(" + str(s.dim) + "," + c + "," + str(series[n]) + ")", sw.ms());
  };

  Report r("even");
  for (auto& c : parallel_map(legs.size(), threads, per_legs)) r.add(std::move(c));
  r.sort();
  return r;
}

struct Triple {
  unsigned n, m, k;
};

/// All (n, m, k) with n + 2k + 3m = d, ordered by m, then k.
inline std::vector<Triple> lemma_triples(unsigned d) {
  std::vector<Triple> out;
  for (unsigned m = 0; 3 * m <= d; ++m)
    for (unsigned k = 0; 3 * m + 2 * k <= d; ++k) out.push_back({d - 3 * m - 2 * k, m, k});
  return out;
}

inline std::string triple_tag(const Triple& t) {
  return "n=" + str(t.n) + ".m=" + str(t.m) + ".k=" + str(t.k);
}

/// Per d: the Q^{n,m,k} with n + 2k + 3m = d are independent, fill the odd
/// slice at L = 2d + 9, and their building blocks lie in Q[u, v, w].
inline Report verify_lemma(unsigned max_d, unsigned threads = 1) {
  using namespace diagrams;
  struct Task {
    unsigned d;
    bool block;  // false: span checks for d; true: membership of one block
    Triple t;
  };
  std::vector<Task> tasks;
  for (unsigned d = 0; d <= max_d; ++d) {
    tasks.push_back({d, false, {}});
    for (const auto& t : lemma_triples(d)) tasks.push_back({d, true, t});
  }

  auto run = [&](std::size_t i) {
    const Task& task = tasks[i];
    std::vector<CheckRecord> out;
    const unsigned L = 2 * task.d + 9;
    if (task.block) {
      Stopwatch sw;
      const auto mem = lemma_domain_membership(lemma_block(task.t.n, task.t.m, task.t.k));
      out.push_back(make_check("lemma.domain.d=" + str(task.d) + "." + triple_tag(task.t),
                               {{"d", str(task.d)}, {"n", str(task.t.n)}, {"m", str(task.t.m)}, {"k", str(task.t.k)}},
                               "true", render(mem.translation_invariant && mem.member), sw.ms()));
      return out;
    }
    const Params params{{"d", str(task.d)}, {"L", str(L)}};
    Stopwatch sw;
    const SliceSpace ambient = tet_slice(L, Parity::odd);
    const auto triples = lemma_triples(task.d);
    QMatrix rows(0, ambient.basis.size());
    const auto images = reduced_y_images();
    for (const auto& t : triples) rows.append_row(slice_coordinates(q_poly<Poly>(t.n, t.m, t.k, images), L));
    const std::size_t r = rank(rows);
    const double t_rank = sw.ms();
    out.push_back(make_check("lemma.rank.d=" + str(task.d), params, str(triples.size()), str(r), t_rank));
    out.push_back(make_check("lemma.target_dim.d=" + str(task.d), params, str(odd_target_dim(L)), str(r), t_rank));
    Stopwatch sw_span;
    out.push_back(make_check("lemma.span.d=" + str(task.d), params, "true",
                             render(row_space_equal(rows, ambient.echelon)), t_rank + sw_span.ms()));
    return out;
  };

  Report rep("lemma");
  for (auto& batch : parallel_map(tasks.size(), threads, run))
    for (auto& c : batch) rep.add(std::move(c));
  rep.sort();
  return rep;
}

inline std::string regime_tag(const asym::Regime& r) { return r.id() == asym::RegimeId::one ? "regime1" : "regime2"; }

/// Leading terms of Q^{n,m,k} under each regime against the closed forms,
/// and separation of the triples of equal d by the pair of leading exponents.
inline Report verify_asymptotics(unsigned max_d, const std::vector<asym::Regime>& regimes, unsigned threads = 1) {
  struct Task {
    Triple t;
    std::size_t regime;
  };
  std::vector<Task> tasks;
  for (unsigned d = 0; d <= max_d; ++d)
    for (const auto& t : lemma_triples(d))
      for (std::size_t r = 0; r < regimes.size(); ++r) tasks.push_back({t, r});

  auto run = [&](std::size_t i) {
    const auto& [t, ri] = tasks[i];
    const asym::Regime& reg = regimes[ri];
    Stopwatch sw;
    const auto check = asym::check_q_asymptotics(t.n, t.m, t.k, reg);
    CheckRecord c = make_check("asym." + regime_tag(reg) + "." + triple_tag(t),
                               {{"n", str(t.n)},
                                {"m", str(t.m)},
                                {"k", str(t.k)},
                                {"regime", asym::regime_name(reg.id())},
                                {"abc", reg.a().to_string() + "," + reg.b().to_string() + "," + reg.c().to_string()},
                                {"exponent", check.expected.exponent.to_string()}},
                               check.expected.to_string(), check.actual.to_string(), sw.ms());
    c.pass = c.pass && check.pass;
    return c;
  };

  Report rep("asymptotics");
  for (auto& c : parallel_map(tasks.size(), threads, run)) rep.add(std::move(c));

  if (regimes.size() >= 2) {
    for (unsigned d = 0; d <= max_d; ++d) {
      const auto triples = lemma_triples(d);
      std::vector<std::vector<BigRational>> keys;
      for (const auto& t : triples) {
        std::vector<BigRational> key;
        for (const auto& reg : regimes) key.push_back(asym::expected_q_leading(t.n, t.m, t.k, reg).value);
        keys.push_back(key);
      }
      bool distinct = true;
      for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = a + 1; b < keys.size(); ++b) distinct = distinct && keys[a] != keys[b];
      rep.add(make_check("asym.separated.d=" + str(d), {{"d", str(d)}}, "true", render(distinct)));
    }
  }
  rep.sort();
  return rep;
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<BigRational> linear_coordinates(const Poly& p) {
  std::vector<BigRational> row(p.vars().size());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) throw std::invalid_argument("linear_coordinates: not a linear form");
    for (std::size_t i = 0; i < row.size(); ++i)
      if (t.mono[i] == 1) row[i] = t.coef;
  }
  return row;
}

}  // namespace detail

/// Randomized identities with a fixed seed.
inline Report verify_properties(std::uint64_t seed, const std::vector<asym::Regime>& regimes) {
  using namespace diagrams;
  Report rep("properties");
  PortableRng rng(seed);
  const auto& Y = y_vars();
  const auto ys = y_generators();

  // Symmetrizer and skew symmetrizer are projectors.
  for (unsigned i = 0; i < 100; ++i) {
    const unsigned deg = i % 9;
    const Character chi = i % 2 == 0 ? Character::trivial : Character::sign;
    const Poly p = random_homogeneous(rng, Y, deg, 1 + rng.below(5));
    Stopwatch sw;
    const auto group = symmetric_group(4, chi);
    const Poly once = symmetrize(p, group);
    const bool ok = symmetrize(once, group) == once;
    rep.add(make_check("prop.projector.i=" + str(i),
                       {{"degree", str(deg)}, {"character", chi == Character::sign ? "sign" : "trivial"}}, "true",
                       render(ok), sw.ms()));
  }

  // Skew-symmetrized monomials are divisible by the discriminant.
  const Poly delta = discriminant(Y);
  const auto skew = symmetric_group(4, Character::sign);
  for (unsigned i = 0; i < 50; ++i) {
    const Poly mono = random_homogeneous(rng, Y, static_cast<unsigned>(rng.below(11)), 1);
    Stopwatch sw;
    const Poly s = symmetrize(mono, skew);
    bool ok = false;
    try {
      ok = divide_exact(s, delta) * delta == s;
    } catch (const std::domain_error&) {
      ok = false;
    }
    rep.add(make_check("prop.delta_divisible.i=" + str(i), {{"monomial", mono.to_string()}}, "true", render(ok),
                       sw.ms()));
  }

  // Changes of variables between edge and face coordinates.
  {
    const auto y_img = y_images_in_x();
    for (std::size_t i = 0; i < 4; ++i)
      rep.add(make_check("prop.roundtrip.y" + str(i + 1), {}, "true",
                         render(congruent_mod_sum(y_from_x(y_img[i]), ys[i]))));
    const auto rel = edge_relations();
    QMatrix relations(0, 6);
    for (const auto& r : rel) relations.append_row(detail::linear_coordinates(r));
    for (std::size_t i = 1; i <= 6; ++i) {
      const Poly back = substitute(x_from_y(i), y_img) - Poly::variable(x_vars(), i - 1);
      QMatrix m = relations;
      if (!back.is_zero()) m.append_row(detail::linear_coordinates(back));
      rep.add(make_check("prop.roundtrip.x" + str(i), {}, "true", render(rank(m) == 3)));
    }
    for (std::size_t j = 0; j < 3; ++j)
      rep.add(make_check("prop.relation_vanishes.r" + str(j + 1), {}, "0", y_from_x(rel[j]).to_string()));
    const Poly x3 = x_from_y(3);
    rep.add(make_check("prop.identity.x1+x5", {}, x3.to_string(), (x_from_y(1) + x_from_y(5)).to_string()));
    rep.add(make_check("prop.identity.x2-x4", {}, x3.to_string(), (x_from_y(2) - x_from_y(4)).to_string()));
    for (unsigned i = 0; i < 10; ++i) {
      const Poly p = random_poly(rng, x_vars(), 4, 4);
      const Poly q = p + random_poly(rng, x_vars(), 3, 2) * rel[rng.below(3)];
      rep.add(make_check("prop.well_defined.i=" + str(i), {}, "true",
                         render(congruent_mod_sum(y_from_x(p), y_from_x(q)))));
    }
  }

  // Regime substitution is a ring homomorphism.
  for (unsigned i = 0; i < 50; ++i) {
    const asym::Regime& reg = regimes[i % regimes.size()];
    const Poly p = random_poly(rng, Y, 3, 3), q = random_poly(rng, Y, 3, 3);
    Stopwatch sw;
    const auto sp = asym::substitute_regime(p, reg), sq = asym::substitute_regime(q, reg);
    const bool ok = asym::substitute_regime(p * q, reg) == sp * sq && asym::substitute_regime(p + q, reg) == sp + sq;
    rep.add(make_check("prop.regime_homomorphism.i=" + str(i), {{"regime", asym::regime_name(reg.id())}}, "true",
                       render(ok), sw.ms()));
  }

  // Fixed identities.
  {
    const VarSet T{"y1", "y2", "y3", "y4", "t"};
    const Poly t = Poly::variable(T, 4);
    std::array<Poly, 4> lift{Poly::variable(T, 0), Poly::variable(T, 1), Poly::variable(T, 2), Poly::variable(T, 3)};
    Poly lhs = Poly::constant(T, 1);
    for (const auto& y : lift) lhs = lhs * (t - y);
    Poly rhs = pow(t, 4);
    for (std::size_t i = 1; i <= 4; ++i) {
      const Poly s = substitute(elementary_symmetric(i, Y), lift) * pow(t, static_cast<unsigned>(4 - i));
      rhs = i % 2 == 1 ? rhs - s : rhs + s;
    }
    rep.add(make_check("prop.vieta", {}, rhs.to_string(), lhs.to_string()));

    const std::array<BigRational, 4> point{1, 2, 3, 4};
    rep.add(make_check("prop.discriminant_value", {}, "12",
                       evaluate<BigRational>(delta, point, BigRational(1)).to_string()));
    const Poly vander = Poly::monomial(Y, Monomial{3, 2, 1, 0});
    rep.add(make_check("prop.skew_leading", {}, (delta * BigRational(BigInt(1), BigInt(24))).to_string(),
                       symmetrize(vander, skew).to_string()));
    for (const Triple& tr : {Triple{0, 0, 0}, Triple{1, 0, 0}, Triple{0, 0, 1}}) {
      const Poly q = q_poly(tr.n, tr.m, tr.k);
      rep.add(make_check("prop.q_skew." + triple_tag(tr), {}, "true", render(symmetrize(q, skew) == q)));
    }
    const Poly cyc = p3(ys[0], ys[1], ys[2]);
    rep.add(make_check("prop.p3_cyclic", {}, cyc.to_string(), p3(ys[1], ys[2], ys[0]).to_string()));
  }

  // Two-term expansion of P2(y1,y2,y3)^n in regime one.
  for (const auto& reg : regimes) {
    if (reg.id() != asym::RegimeId::one) continue;
    const auto img = asym::regime_images(reg);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto e = pow(p2(img[0], img[1], img[2]), n);
      const BigRational two_n = pow(BigRational(2), n);
      const BigRational top = BigRational(2L * n) * reg.a();
      const std::string expected = two_n.to_string() + "*t^(" + top.to_string() + ") " +
                                   (-BigRational(n) * two_n).to_string() + "*t^(" +
                                   (top - (reg.a() - reg.b())).to_string() + ")";
      std::string actual;
      auto it = e.terms().begin();
      for (int j = 0; j < 2 && it != e.terms().end(); ++j, ++it)
        actual += (j ? " " : "") + it->second.coef.to_string() + "*t^(" + it->first.to_string() + ")";
      rep.add(make_check("prop.p2_expansion.n=" + str(n), {{"regime", "one"}}, expected, actual));
    }
  }

  // Catalog consistency.
  for (const auto& g : kCatalog) {
    bool ok = g.euler_number() == -2 && g.betti == 3;
    for (unsigned L = 0; L <= 30; ++L) {
      const auto info = DegreeInfo::from_legs(L);
      ok = ok && info.jacobi_degree - info.legs == 2 && parity_of(info.jacobi_degree) == info.parity;
    }
    rep.add(make_check("prop.catalog." + std::string(g.name), {{"status", std::string(g.status())}}, "true",
                       render(ok)));
  }

  rep.sort();
  return rep;
}

/// Every suite at the configured caps, plus a coverage record over the
/// library operations.
inline Report run_all(const Config& cfg) {
  trace::reset();
  Report all("all");
  all.merge(verify_odd_vanishing(cfg.odd_max_legs, cfg.threads, cfg.span_max_legs));
  all.merge(verify_even_dims(cfg.even_max_legs, cfg.threads, cfg.corrupt_closed_form));
  all.merge(verify_lemma(cfg.lemma_max_d, cfg.threads));
  all.merge(verify_asymptotics(cfg.asym_max_d, cfg.regimes, cfg.threads));
  all.merge(verify_properties(cfg.seed, cfg.regimes));
  std::string missing;
  for (auto name : trace::untouched()) missing += (missing.empty() ? "" : ",") + std::string(name);
  all.add(make_check("coverage.operations", {{"total", str(trace::kOpNames.size())}}, "none",
                     missing.empty() ? "none" : missing));
  all.sort();
  return all;
}

}  // namespace jd3::verify
