#include <catch_amalgamated.hpp>

#include <sstream>

#include "jd3/verify/suites.hpp"

using namespace jd3;
using namespace jd3::verify;

namespace {

const CheckRecord* find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks())
    if (c.id == id) return &c;
  return nullptr;
}

std::size_t count_prefix(const Report& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& c : r.checks()) n += c.id.rfind(prefix, 0) == 0;
  return n;
}

std::string without_timing(const Report& r) {
  auto j = r.to_json();
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j.dump();
}

}  // namespace

TEST_CASE("natural ordering") {
  CHECK(natural_less("odd.L=9", "odd.L=11"));
  CHECK_FALSE(natural_less("odd.L=11", "odd.L=9"));
  CHECK(natural_less("a", "b"));
  CHECK(natural_less("x2", "x10"));
  CHECK(natural_less("n=1.m=0", "n=1.m=2"));
  CHECK_FALSE(natural_less("same", "same"));
}

TEST_CASE("records, sorting and serialization") {
  Report r("demo");
  r.add(make_check("b.L=11", {{"L", "11"}}, "1", "1", 2.5));
  r.add(make_check("b.L=9", {{"L", "9"}}, "1", "2"));
  r.add(make_check("a", {{"k", "x,y"}}, "a \"q\"", "a \"q\""));
  r.sort();
  REQUIRE(r.checks().size() == 3);
  CHECK(r.checks()[0].id == "a");
  CHECK(r.checks()[1].id == "b.L=9");
  CHECK(r.checks()[2].id == "b.L=11");
  CHECK_FALSE(r.checks()[1].pass);
  const auto s = r.summary();
  CHECK(s.total == 3);
  CHECK(s.passed == 2);
  CHECK(s.failed == 1);
  CHECK_FALSE(r.all_passed());

  const auto j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["summary"]["failed"] == 1);
  const auto& first = j["checks"][0];
  std::vector<std::string> keys;
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "params", "expected", "actual", "pass", "elapsed_ms"});
  CHECK(j["checks"][2]["elapsed_ms"] == 2.5);

  std::ostringstream csv;
  r.write_csv(csv);
  CHECK(csv.str() ==
        "id,params,expected,actual,pass\n"
        "a,\"k=x,y\",\"a \"\"q\"\"\",\"a \"\"q\"\"\",true\n"
        "b.L=9,L=9,1,2,false\n"
        "b.L=11,L=11,1,1,true\n");

  std::ostringstream text;
  r.write_text(text);
  CHECK(text.str().find("demo: 2/3 passed, 1 failed") != std::string::npos);
}

TEST_CASE("odd vanishing suite") {
  const Report r = verify_odd_vanishing(9);
  CHECK(r.all_passed());
  for (unsigned L = 1; L <= 9; L += 2) {
    const auto* q = find(r, "odd.quotient_dim.L=" + std::to_string(L));
    REQUIRE(q != nullptr);
    CHECK(q->actual == "0");
  }
  CHECK(find(r, "odd.ambient_dim.L=9")->actual == "1");
  CHECK(find(r, "odd.span_equal.eq8.L=9") != nullptr);
  CHECK(verify_odd_vanishing(0).summary().total == 0);
}

TEST_CASE("even dimension suite") {
  const Report r = verify_even_dims(12);
  CHECK(r.all_passed());
  const std::vector<std::string> dims{"1", "1", "2", "3", "4", "5", "7"};
  for (unsigned n = 0; n <= 12; n += 2) {
    const auto* c = find(r, "even.threeway.n=" + std::to_string(n));
    REQUIRE(c != nullptr);
    const auto& d = dims[n / 2];
    CHECK(c->actual == "(" + d + "," + d + "," + d + ")");
  }
  const Report zero = verify_even_dims(0);
  CHECK(zero.summary().total == 1);
  CHECK(zero.checks()[0].actual == "(1,1,1)");
  CHECK_FALSE(verify_even_dims(6, 1, true).all_passed());
}

TEST_CASE("lemma suite") {
  const Report r = verify_lemma(3);
  CHECK(r.all_passed());
  CHECK(find(r, "lemma.rank.d=0")->expected == "1");
  CHECK(find(r, "lemma.rank.d=3")->actual == "3");
  CHECK(find(r, "lemma.target_dim.d=3")->expected == "3");
  CHECK(count_prefix(r, "lemma.domain.d=3.") == 3);
  const auto ts = lemma_triples(3);
  REQUIRE(ts.size() == 3);
  CHECK(lemma_triples(6).size() == 7);
}

TEST_CASE("asymptotics suite") {
  const Config cfg;
  const Report zero = verify_asymptotics(0, cfg.regimes);
  CHECK(zero.all_passed());
  CHECK(find(zero, "asym.regime1.n=0.m=0.k=0")->actual.rfind("9*t^(", 0) == 0);
  CHECK(find(zero, "asym.regime2.n=0.m=0.k=0")->actual.rfind("18*t^(", 0) == 0);
  CHECK(count_prefix(zero, "asym.regime") == 2);
  const Report three = verify_asymptotics(3, cfg.regimes);
  CHECK(three.all_passed());
  CHECK(count_prefix(three, "asym.regime1.") == 7);
  CHECK(count_prefix(three, "asym.regime2.") == 7);
}

TEST_CASE("property suite") {
  const Config cfg;
  const Report r = verify_properties(cfg.seed, cfg.regimes);
  CHECK(r.all_passed());
  CHECK(count_prefix(r, "prop.projector.") == 100);
  CHECK(count_prefix(r, "prop.delta_divisible.") == 50);
  CHECK(count_prefix(r, "prop.regime_homomorphism.") == 50);
  CHECK(without_timing(r) == without_timing(verify_properties(cfg.seed, cfg.regimes)));
}

TEST_CASE("reports do not depend on the thread count") {
  CHECK(without_timing(verify_odd_vanishing(15, 1)) == without_timing(verify_odd_vanishing(15, 3)));
  CHECK(without_timing(verify_lemma(2, 1)) == without_timing(verify_lemma(2, 4)));
}

TEST_CASE("parallel map keeps order and forwards exceptions") {
  const auto v = parallel_map(20, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
  CHECK_THROWS_AS(parallel_map(8, 3,
                               [](std::size_t i) -> int {
                                 if (i == 5) throw std::runtime_error("boom");
                                 return 0;
                               }),
                  std::runtime_error);
  CHECK(parallel_map(0, 2, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("suites touch every library operation") {
  Config cfg;
  cfg.odd_max_legs = 11;
  cfg.even_max_legs = 6;
  cfg.lemma_max_d = 1;
  cfg.asym_max_d = 1;
  cfg.span_max_legs = 11;
  const Report r = run_all(cfg);
  CHECK(r.all_passed());
  CHECK(trace::untouched().empty());
  CHECK(find(r, "coverage.operations")->actual == "none");

  cfg.corrupt_closed_form = true;
  CHECK_FALSE(run_all(cfg).all_passed());
}
