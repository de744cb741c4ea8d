#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "qrkit/binom_sums.hpp"
#include "qrkit/errors.hpp"
#include "qrkit/gaussian.hpp"
#include "qrkit/lucas.hpp"
#include "qrkit/modular.hpp"
#include "qrkit/quadratic_forms.hpp"
#include "qrkit/text.hpp"
#include "qrkit/two_squares.hpp"
#include "qrkit/verifier.hpp"

namespace {

uint64_t default_pmax() {
  const char* env = std::getenv("QRK_PMAX_DEFAULT");
  if (env != nullptr) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 3) return v;
  }
  return 1000;
}

int emit_reports(const std::vector<qrkit::VerificationReport>& reps,
                 const std::string& format) {
  if (format == "json") {
    if (reps.size() == 1) {
      std::cout << qrkit::report_json(reps.front()).dump(2) << "\n";
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reps) arr.push_back(qrkit::report_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << qrkit::csv_header() << "\n";
    for (const auto& r : reps) std::cout << qrkit::csv_row(r) << "\n";
  } else {
    uint64_t total = 0;
    for (const auto& r : reps) {
      qrkit::print_human(std::cout, r);
      total += r.counterexamples.size();
    }
    if (reps.size() > 1)
      std::cout << "overall: " << reps.size() << " checks, " << total
                << " counterexamples\n";
  }
  for (const auto& r : reps)
    if (!r.counterexamples.empty()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qrkit;

  CLI::App app{"quartic residue toolkit: symbols, class sums, sweeps"};
  app.require_subcommand(1);

  uint64_t p = 0, q = 0, n = 0, pval = 0, qval = 0;
  int64_t disc = 0;
  std::string z_text, x_text, c_text, kind_text = "main", theorem_text;
  std::string format = "human";
  SweepOptions sweep;
  sweep.prime_bound = default_pmax();

  CLI::App* sym = app.add_subcommand("symbol", "quartic symbol of a+bi mod p");
  sym->add_option("--p", p, "odd prime modulus")->required();
  sym->add_option("--z", z_text, "Gaussian integer, e.g. 3+2i")->required();

  CLI::App* cls = app.add_subcommand("classify", "quartic class r of c mod p");
  cls->add_option("--p", p, "odd prime modulus")->required();
  cls->add_option("--c", c_text, "residue as n or n/d")->required();

  CLI::App* sum = app.add_subcommand("sum", "binomial class sum at x mod p");
  sum->add_option("--p", p, "odd prime modulus")->required();
  sum->add_option("--x", x_text, "argument as n or n/d")->required();
  sum->add_option("--kind", kind_text, "main|upper|center")
      ->check(CLI::IsMember({"main", "upper", "center"}));

  CLI::App* luc = app.add_subcommand("lucas", "Lucas pair U_n, V_n mod p");
  luc->add_option("--p", p, "odd prime modulus")->required();
  luc->add_option("--P-val", pval, "recurrence parameter P")->required();
  luc->add_option("--Q-val", qval, "recurrence parameter Q")->required();
  luc->add_option("--n", n, "index")->required();

  CLI::App* two = app.add_subcommand("twosquares", "q = a^2 + b^2 for q = 1 mod 4");
  two->add_option("--q", q, "prime = 1 mod 4")->required();

  CLI::App* frm = app.add_subcommand("forms", "reduced positive forms of discriminant d");
  frm->add_option("--disc", disc, "negative discriminant, 0 or 1 mod 4")->required();

  CLI::App* ver = app.add_subcommand("verify", "sweep one check over primes");
  ver->add_option("--theorem", theorem_text, "check id, e.g. T2_1a")->required();
  ver->add_option("--pmax", sweep.prime_bound, "prime bound");
  ver->add_option("--cmax", sweep.param_bound, "parameter bound");
  ver->add_option("--jobs", sweep.jobs, "worker threads");
  ver->add_flag("--exhaustive", sweep.exhaustive, "full parameter range");
  ver->add_option("--format", format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  CLI::App* vall = app.add_subcommand("verify-all", "sweep every check");
  vall->add_option("--pmax", sweep.prime_bound, "prime bound");
  vall->add_option("--cmax", sweep.param_bound, "parameter bound");
  vall->add_option("--jobs", sweep.jobs, "worker threads");
  vall->add_flag("--exhaustive", sweep.exhaustive, "full parameter range");
  vall->add_option("--format", format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sym->parsed()) {
      std::cout << quartic_str(quartic_jacobi(parse_gaussian(z_text), p)) << "\n";
    } else if (cls->parsed()) {
      std::cout << quartic_class(parse_rational(c_text), p) << "\n";
    } else if (sum->parsed()) {
      SumKind kind = kind_text == "main"    ? SumKind::Main
                     : kind_text == "upper" ? SumKind::Upper
                                            : SumKind::Center;
      std::cout << sum_eval(kind, reduce_rational(parse_rational(x_text), p), p)
                << "\n";
    } else if (luc->parsed()) {
      LucasPair uv = lucas_uv(n, pval, qval, p);
      std::cout << "U=" << uv.u << " V=" << uv.v << "\n";
    } else if (two->parsed()) {
      TwoSquares d = decompose(q);
      auto [sa, sb] = primary_signs(d);
      std::cout << "a=" << d.a << " b=" << d.b << "; lemma24: a=" << sa
                << " b=" << sb << "\n";
    } else if (frm->parsed()) {
      for (const Form& f : reduced_forms(disc)) std::cout << form_str(f) << "\n";
    } else if (ver->parsed()) {
      return emit_reports({verify(theorem_from_name(theorem_text), sweep)},
                          format);
    } else if (vall->parsed()) {
      return emit_reports(verify_all(sweep), format);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
