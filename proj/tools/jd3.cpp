#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jd3/jd3.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outputs {
  std::string json_path;
  std::string csv_path;
  unsigned threads = 1;

  void attach(CLI::App& app) {
    app.add_option("--json", json_path, "Write the report as JSON to PATH");
    app.add_option("--csv", csv_path, "Write the report as CSV to PATH");
    app.add_option("--threads", threads, "Worker threads for independent slices")->check(CLI::Range(1U, 256U));
  }
};

int emit(const jd3::verify::Report& report, const Outputs& out) {
  report.write_text(std::cout);
  if (!out.json_path.empty()) {
    std::ofstream f(out.json_path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + out.json_path + " for writing");
    report.write_json(f);
  }
  if (!out.csv_path.empty()) {
    std::ofstream f(out.csv_path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + out.csv_path + " for writing");
    report.write_csv(f);
  }
  return report.all_passed() ? 0 : 1;
}

std::vector<jd3::asym::Regime> parse_regimes(const std::string& which, const std::vector<std::string>& abc) {
  using jd3::asym::Regime;
  using jd3::asym::RegimeId;
  if (!abc.empty()) {
    if (which == "both") throw UsageError("--abc needs --regime one or --regime two");
    const RegimeId id = which == "one" ? RegimeId::one : RegimeId::two;
    try {
      return {Regime(id, jd3::BigRational::parse(abc[0]), jd3::BigRational::parse(abc[1]),
                     jd3::BigRational::parse(abc[2]))};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  if (which == "one") return {Regime::default_for(RegimeId::one)};
  if (which == "two") return {Regime::default_for(RegimeId::two)};
  return {Regime::default_for(RegimeId::one), Regime::default_for(RegimeId::two)};
}

int print_dims(const std::string& parity, unsigned legs) {
  using namespace jd3::diagrams;
  const Parity p = parity == "odd" ? Parity::odd : Parity::even;
  if (p != parity_of(legs)) throw UsageError("--parity " + parity + " does not match --legs " + std::to_string(legs));
  const auto info = DegreeInfo::from_legs(legs);
  const SliceSpace s = tet_slice(legs, p);
  std::cout << "legs " << legs << "\ndegree " << info.jacobi_degree << "\nparity " << parity_name(p) << "\ntet_dim "
            << s.dim << '\n';
  if (p == Parity::odd) {
    const SliceSpace psi = psi4_image_slice(s);
    std::cout << "target_dim " << odd_target_dim(legs) << "\npsi4_rank " << psi.dim << "\nquotient_dim "
              << s.dim - psi.dim << "\ntsq_dim " << tsq_odd_dim(legs) << '\n';
  } else {
    std::cout << "closed_form " << even_closed_form(legs) << "\nseries " << hilbert_coefficients(legs)[legs] << '\n';
  }
  for (const auto& g : kCatalog) std::cout << "graph " << g.name << ": " << g.status() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of 3-loop Jacobi diagram dimensions"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->require_subcommand(1);

  Outputs odd_out, even_out, lemma_out, asym_out, all_out;
  unsigned odd_max = 29, even_max = 30, lemma_max = 8, asym_max = 6;

  auto* odd = verify->add_subcommand("odd", "Odd slices vanish after the psi4 image");
  odd->add_option("--max-legs", odd_max, "Largest odd leg count")->check(CLI::Range(1U, 61U));
  odd_out.attach(*odd);

  auto* even = verify->add_subcommand("even", "Even slice dimensions");
  even->add_option("--max-legs", even_max, "Largest even leg count")->check(CLI::Range(0U, 60U));
  even_out.attach(*even);

  auto* lemma = verify->add_subcommand("lemma", "Independence and span of Q^{n,m,k}");
  lemma->add_option("--max-d", lemma_max, "Largest d = n + 2k + 3m")->check(CLI::Range(0U, 20U));
  lemma_out.attach(*lemma);

  std::string regime = "both";
  std::vector<std::string> abc;
  auto* asym_cmd = verify->add_subcommand("asymptotics", "Leading terms of Q^{n,m,k}");
  asym_cmd->add_option("--max-d", asym_max, "Largest d = n + 2k + 3m")->check(CLI::Range(0U, 20U));
  asym_cmd->add_option("--regime", regime, "one, two or both")->check(CLI::IsMember({"one", "two", "both"}));
  asym_cmd->add_option("--abc", abc, "Exact rationals a b c for the chosen regime")->expected(3);
  asym_out.attach(*asym_cmd);

  std::string parity;
  unsigned legs = 0;
  auto* dims = app.add_subcommand("dims", "Dimension of one slice");
  dims->add_option("--parity", parity, "odd or even")->required()->check(CLI::IsMember({"odd", "even"}));
  dims->add_option("--legs", legs, "Number of legs")->required()->check(CLI::Range(0U, 61U));

  jd3::verify::Config cfg;
  auto* all = app.add_subcommand("all", "Run every suite");
  all->add_option("--odd-max-legs", cfg.odd_max_legs, "Largest odd leg count")->check(CLI::Range(1U, 61U));
  all->add_option("--even-max-legs", cfg.even_max_legs, "Largest even leg count")->check(CLI::Range(0U, 60U));
  all->add_option("--lemma-max-d", cfg.lemma_max_d, "Largest d for the lemma suite")->check(CLI::Range(0U, 20U));
  all->add_option("--asym-max-d", cfg.asym_max_d, "Largest d for the asymptotics suite")->check(CLI::Range(0U, 20U));
  all->add_flag("--corrupt-closed-form", cfg.corrupt_closed_form)->group("");
  all_out.attach(*all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    using namespace jd3::verify;
    if (*odd) return emit(verify_odd_vanishing(odd_max, odd_out.threads), odd_out);
    if (*even) return emit(verify_even_dims(even_max, even_out.threads), even_out);
    if (*lemma) return emit(verify_lemma(lemma_max, lemma_out.threads), lemma_out);
    if (*asym_cmd)
      return emit(verify_asymptotics(asym_max, parse_regimes(regime, abc), asym_out.threads), asym_out);
    if (*dims) return print_dims(parity, legs);
    if (*all) {
      cfg.threads = all_out.threads;
      return emit(run_all(cfg), all_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
