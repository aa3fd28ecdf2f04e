// Acceptance run: one PASS/FAIL line per criterion, each against its
// runtime budget.  Expected values come from oracles written here rather
// than from the library's own closed forms.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jd3/jd3.hpp"

using namespace jd3;
using namespace jd3::diagrams;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool report_line(int number, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool within = budget_s <= 0 || secs < budget_s;
  const bool pass = out.ok && within;
  char timing[96];
  if (budget_s > 0)
    std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", secs, budget_s);
  else
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << "criterion " << number << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << timing << ")"
            << (out.detail.empty() ? "" : "  " + out.detail) << (within ? "" : "  over budget") << std::endl;
  return pass;
}

// #{(n, m, k) : 2n + 6m + 4k = r}
std::size_t triples(unsigned r) {
  std::size_t c = 0;
  for (unsigned n = 0; 2 * n <= r; ++n)
    for (unsigned k = 0; 2 * n + 4 * k <= r; ++k)
      if ((r - 2 * n - 4 * k) % 6 == 0) ++c;
  return c;
}

// #{(a, b, c) : 2a + 4b + 6c = n}
std::size_t partitions(unsigned n) {
  std::size_t c = 0;
  for (unsigned a = 0; 2 * a <= n; ++a)
    for (unsigned b = 0; 2 * a + 4 * b <= n; ++b)
      if ((n - 2 * a - 4 * b) % 6 == 0) ++c;
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + JD3_BINARY + "\" " + args + " >/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string normalized_report(const std::filesystem::path& p) {
  std::ifstream f(p);
  auto j = nlohmann::ordered_json::parse(f);
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j.dump();
}

}  // namespace

int main() {
  int failures = 0;

  failures += !report_line(1, "odd slices: dim tet - rank psi4 image = 0 for odd L <= 29", 30, [] {
    Outcome o;
    std::ostringstream dims;
    for (unsigned L = 1; L <= 29; L += 2) {
      const SliceSpace ambient = tet_slice(L, Parity::odd);
      const SliceSpace image = psi4_image_slice(ambient);
      const std::size_t expected = L < 9 ? 0 : triples(L - 9);
      o.ok = o.ok && ambient.dim == expected && ambient.dim - image.dim == 0;
      dims << (L == 1 ? "" : ",") << ambient.dim << "-" << image.dim;
    }
    o.detail = "dim-rank per L: " + dims.str();
    return o;
  });

  failures += !report_line(2, "even slices: rank = closed form = series for even n <= 30", 10, [] {
    Outcome o;
    const auto series = hilbert_coefficients(30);
    std::ostringstream dims;
    for (unsigned n = 0; n <= 30; n += 2) {
      const std::size_t rank_dim = tet_slice(n, Parity::even).dim;
      const std::size_t closed = (n * n + 12 * n) / 48 + 1;
      o.ok = o.ok && rank_dim == closed && closed == series[n] && closed == partitions(n) &&
             even_closed_form(n) == closed;
      dims << (n == 0 ? "" : ",") << rank_dim;
    }
    const std::vector<std::size_t> spot{1, 1, 2, 3, 4, 5, 7};
    for (unsigned n = 0; n <= 12; n += 2) o.ok = o.ok && partitions(n) == spot[n / 2];
    o.detail = "dims: " + dims.str();
    return o;
  });

  failures += !report_line(3, "Q^{n,m,k} independent and spanning for d <= 8", 20, [] {
    Outcome o;
    std::ostringstream ranks;
    const auto images = reduced_y_images();
    for (unsigned d = 0; d <= 8; ++d) {
      const unsigned L = 2 * d + 9;
      std::size_t count = 0;
      QMatrix rows(0, slice_size(L));
      for (unsigned n = 0; n <= d; ++n)
        for (unsigned k = 0; n + 2 * k <= d; ++k)
          if ((d - n - 2 * k) % 3 == 0) {
            ++count;
            rows.append_row(slice_coordinates(q_poly<Poly>(n, (d - n - 2 * k) / 3, k, images), L));
          }
      const SliceSpace ambient = tet_slice(L, Parity::odd);
      const std::size_t r = rank(rows);
      o.ok = o.ok && r == count && r == triples(L - 9) && row_space_equal(rows, ambient.echelon);
      ranks << (d == 0 ? "" : ",") << r << "/" << count;
    }
    o.detail = "rank/count: " + ranks.str();
    return o;
  });

  failures += !report_line(4, "leading terms of Q^{n,m,k} for n+2k+3m <= 6, both regimes", 10, [] {
    Outcome o;
    std::size_t checked = 0;
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned m = 0; n + 3 * m <= 6; ++m)
        for (unsigned k = 0; n + 3 * m + 2 * k <= 6; ++k)
          for (auto id : {asym::RegimeId::one, asym::RegimeId::two}) {
            const auto r = asym::Regime::default_for(id);
            const long eps = k == 0 ? 3 : 1;
            const long N = n, M = m, K = k;
            BigRational coef;
            asym::ExpVector e;
            if (id == asym::RegimeId::one) {
              coef = BigRational(eps * (1L << n) * (2 * M + 3));
              e = {2 * (N + 2 * M + K + 3), 2 * (M + K + 1), 1};
            } else {
              coef = BigRational(eps * (1L << (n + 1)) * (N + 2 * M + 3));
              e = {2 * (N + 2 * M + 2 * K) + 5, 2 * M + 3, 1};
            }
            const auto q = q_poly<asym::PuiseuxPoly>(n, m, k, asym::regime_images(r));
            const auto lt = asym::leading_term(q, r);
            o.ok = o.ok && lt.coefficient == coef && lt.value == r.value(e);
            ++checked;
          }
    o.detail = std::to_string(checked) + " leading terms";
    return o;
  });

  failures += !report_line(5, "property suite (projector, divisibility, round trips, homomorphism)", 10, [] {
    const verify::Config cfg;
    const verify::Report r = verify::verify_properties(cfg.seed, cfg.regimes);
    const auto s = r.summary();
    return Outcome{r.all_passed(), std::to_string(s.passed) + "/" + std::to_string(s.total) + " checks"};
  });

  failures += !report_line(6, "two `jd3 all --json` runs are identical apart from elapsed_ms", 0, [] {
    const std::filesystem::path dir = JD3_SCRATCH;
    const auto a = dir / "determinism_a.json", b = dir / "determinism_b.json";
    const int ea = run_cli("all --json " + a.string());
    const int eb = run_cli("all --json " + b.string());
    const bool same = normalized_report(a) == normalized_report(b);
    return Outcome{ea == 0 && eb == 0 && same, "exit codes " + std::to_string(ea) + "," + std::to_string(eb)};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
