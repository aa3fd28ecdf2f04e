#include <catch_amalgamated.hpp>

#include "jd3/asymptotics/puiseux.hpp"
#include "jd3/verify/suites.hpp"

using namespace jd3;
using namespace jd3::asym;

namespace {

const Regime& one() {
  static const Regime r = Regime::default_for(RegimeId::one);
  return r;
}
const Regime& two() {
  static const Regime r = Regime::default_for(RegimeId::two);
  return r;
}

PuiseuxPoly t_pow(const Regime& r, ExpVector e, long c = 1) { return PuiseuxPoly::term(r, e, BigRational(c)); }

}  // namespace

TEST_CASE("regime inequalities") {
  CHECK(Regime::satisfied(RegimeId::one, 2, BigRational(8, 5), 1));
  CHECK(Regime::satisfied(RegimeId::two, 2, BigRational(7, 5), 1));
  CHECK_FALSE(Regime::satisfied(RegimeId::one, 2, BigRational(7, 5), 1));
  CHECK_FALSE(Regime::satisfied(RegimeId::two, 2, BigRational(8, 5), 1));
  CHECK_FALSE(Regime::satisfied(RegimeId::one, 1, 2, 3));
  CHECK_FALSE(Regime::satisfied(RegimeId::one, 3, 2, 0));
  CHECK_THROWS_AS(Regime(RegimeId::one, 3, 2, 1), std::invalid_argument);  // a-b = b-c
  CHECK_NOTHROW(Regime(RegimeId::one, 10, 7, 3));
  CHECK_NOTHROW(Regime(RegimeId::two, 10, 6, 3));
}

TEST_CASE("printed substitution identities") {
  const auto y = y_generators();
  CHECK(substitute_regime(y[0] - y[3], one()) == t_pow(one(), {1, 0, 0}));
  CHECK(substitute_regime(y[0] - y[1], two()) == t_pow(two(), {0, 1, 0}));
  for (const Regime* r : {&one(), &two()}) CHECK(substitute_regime(y[0] + y[1] + y[2] + y[3], *r).is_zero());
  CHECK_THROWS_AS(substitute_regime(Poly::variable(VarSet{"a"}, 0), one()), std::invalid_argument);
}

TEST_CASE("leading terms") {
  const auto lt = leading_term(t_pow(one(), {1, 0, 0}) - t_pow(one(), {0, 1, 0}), one());
  CHECK(lt.coefficient == BigRational(1));
  CHECK(lt.exponent == ExpVector{1, 0, 0});
  CHECK_THROWS_AS(leading_term(PuiseuxPoly(one()), one()), std::domain_error);
  CHECK_THROWS_AS(leading_term(t_pow(one(), {1, 0, 0}), two()), std::invalid_argument);

  // Distinct exponent vectors with the same value 7 at (2, 8/5, 1) merge.
  const ExpVector e1{2, 0, 3}, e2{1, 0, 5};
  REQUIRE(one().value(e1) == one().value(e2));
  const PuiseuxPoly merged = t_pow(one(), e1, 2) + t_pow(one(), e2, -2);
  CHECK(merged.is_zero());
  const PuiseuxPoly kept = t_pow(one(), e1, 2) + t_pow(one(), e2, 3);
  CHECK(kept.terms().size() == 1);
  CHECK(leading_term(kept, one()).coefficient == BigRational(5));
}

TEST_CASE("closed forms for Q at small parameters") {
  auto check = [](unsigned n, unsigned m, unsigned k, const Regime& r, long coef, ExpVector e) {
    const auto c = check_q_asymptotics(n, m, k, r);
    CHECK(c.pass);
    CHECK(c.actual.coefficient == BigRational(coef));
    CHECK(c.actual.value == r.value(e));
    CHECK(c.expected.exponent == e);
  };
  check(0, 0, 0, one(), 9, {6, 2, 1});
  check(1, 0, 0, one(), 18, {8, 2, 1});
  check(0, 0, 1, two(), 6, {9, 3, 1});
  check(0, 0, 0, two(), 18, {5, 3, 1});
  CHECK(verify_q_asymptotics(0, 1, 0, one()));
}

TEST_CASE("direct and symbolic substitution agree") {
  for (unsigned d = 0; d <= 2; ++d)
    for (const auto& t : verify::lemma_triples(d))
      for (const Regime* r : {&one(), &two()}) {
        const PuiseuxPoly via_poly = substitute_regime(q_poly(t.n, t.m, t.k), *r);
        const PuiseuxPoly direct = q_poly<PuiseuxPoly>(t.n, t.m, t.k, regime_images(*r));
        CHECK(via_poly == direct);
      }
}

TEST_CASE("leading coefficients are positive and exponents separate triples") {
  for (unsigned d = 0; d <= 6; ++d) {
    const auto ts = verify::lemma_triples(d);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto a1 = expected_q_leading(ts[i].n, ts[i].m, ts[i].k, one());
      const auto a2 = expected_q_leading(ts[i].n, ts[i].m, ts[i].k, two());
      CHECK(a1.coefficient.sign() > 0);
      CHECK(a2.coefficient.sign() > 0);
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        const auto b1 = expected_q_leading(ts[j].n, ts[j].m, ts[j].k, one());
        const auto b2 = expected_q_leading(ts[j].n, ts[j].m, ts[j].k, two());
        CHECK((a1.value != b1.value || a2.value != b2.value));
      }
    }
  }
}

TEST_CASE("regime substitution is a ring homomorphism") {
  verify::PortableRng rng(2024);
  for (int i = 0; i < 30; ++i) {
    const Regime& r = i % 2 ? two() : one();
    const Poly p = verify::random_poly(rng, y_vars(), 3, 3), q = verify::random_poly(rng, y_vars(), 3, 3);
    CHECK(substitute_regime(p * q, r) == substitute_regime(p, r) * substitute_regime(q, r));
    CHECK(substitute_regime(p + q, r) == substitute_regime(p, r) + substitute_regime(q, r));
  }
}

TEST_CASE("two-term expansion of P2^n in regime one") {
  const auto img = regime_images(one());
  for (unsigned n = 1; n <= 5; ++n) {
    const auto e = pow(p2(img[0], img[1], img[2]), n);
    auto it = e.terms().begin();
    const BigRational two_n = pow(BigRational(2), n);
    CHECK(it->first == BigRational(2L * n) * one().a());
    CHECK(it->second.coef == two_n);
    ++it;
    CHECK(it->first == BigRational(2L * n) * one().a() - (one().a() - one().b()));
    CHECK(it->second.coef == -BigRational(n) * two_n);
  }
}

TEST_CASE("exponent rendering") {
  CHECK(ExpVector{6, 2, 1}.to_string() == "6a+2b+c");
  CHECK(ExpVector{-1, 1, 0}.to_string() == "-a+b");
  CHECK(ExpVector{}.to_string() == "0");
  CHECK(t_pow(one(), {1, 0, 0}, -3).to_string() == "-3*t^(a)");
}
