// Command-line front end: expansion, dimensions, Hilbert data, span checks,
// decomposition and the release verification suite. Exit codes: 0 success,
// 1 mathematical failure, 2 malformed invocation.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wjf/catalog.hpp"
#include "wjf/dimension.hpp"
#include "wjf/index.hpp"
#include "wjf/laurent.hpp"
#include "wjf/rational.hpp"
#include "wjf/series.hpp"
#include "wjf/series_io.hpp"
#include "wjf/structure.hpp"
#include "wjf/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "exact computations with weak Jacobi forms of one- and two-variable "
      "lattice index"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  std::string form_id;
  std::string format = "text";
  std::string index_text;
  std::string target;
  int prec = 6;
  long long weight = 0;
  int ha = 0, hb = 0, hc = 0;
  bool even = false;
  long long grid = 4;

  const char* prec_help = "precision in whole q-orders";

  CLI::App* cmd_expand =
      app.add_subcommand("expand", "print the Fourier expansion of a form");
  cmd_expand
      ->add_option("--form", form_id,
                   "identifier such as E4, phi_0_1@z or Phi_0_323|sub1")
      ->required();
  cmd_expand->add_option("--prec", prec, prec_help)
      ->envname("WJF_PREC")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_expand->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* cmd_dim =
      app.add_subcommand("dim", "dimension of a weak space of rank-two index");
  cmd_dim->add_option("-k,--weight", weight, "weight")->required();
  cmd_dim
      ->add_option("-i,--index", index_text,
                   "index as a,b,c or gram:g11,g12,g22")
      ->required();

  CLI::App* cmd_weights = app.add_subcommand(
      "weights", "generator weight numerator of an index, one line per term");
  cmd_weights
      ->add_option("-i,--index", index_text,
                   "index as a,b,c or gram:g11,g12,g22")
      ->required();

  CLI::App* cmd_hilbert = app.add_subcommand(
      "hilbert", "the same numerator from the generating-function expansion");
  cmd_hilbert->add_option("-a", ha, "first entry")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_hilbert->add_option("-b", hb, "second entry")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_hilbert->add_option("-c", hc, "third entry")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmd_span = app.add_subcommand(
      "span", "span rank of the catalog monomials at a weight and index");
  cmd_span->add_option("-k,--weight", weight, "weight")->required();
  cmd_span
      ->add_option("-i,--index", index_text,
                   "index as a,b,c or gram:g11,g12,g22")
      ->required();
  cmd_span->add_flag("--even", even, "restrict to the even-subring catalog");
  cmd_span->add_option("--prec", prec, prec_help)
      ->envname("WJF_PREC")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "write a series as a polynomial in the catalog forms");
  cmd_decompose
      ->add_option("--target", target, "form identifier or JSON file path")
      ->required();
  cmd_decompose->add_option("-k,--weight", weight, "weight of the target")
      ->required();
  cmd_decompose
      ->add_option("-i,--index", index_text,
                   "index as a,b,c or gram:g11,g12,g22")
      ->required();
  cmd_decompose->add_option("--prec", prec, prec_help)
      ->envname("WJF_PREC")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the release checks");
  cmd_verify
      ->add_option("--grid", grid, "structure-grid bound on a + b + c")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const long long prec24 = 24LL * prec;

  // Input validation beyond flag syntax: index text, form identifiers and
  // target files are checked up front so failures exit with the usage code.
  wjf::IndexMatrix m;
  if (app.got_subcommand(cmd_dim) || app.got_subcommand(cmd_weights) ||
      app.got_subcommand(cmd_span) || app.got_subcommand(cmd_decompose)) {
    try {
      m = wjf::parse_index(index_text);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (app.got_subcommand(cmd_expand) && !wjf::is_known_form(form_id)) {
    std::cerr << "error: unknown form: " << form_id << "\n";
    return 2;
  }
  wjf::JacobiSeries target_series;
  if (app.got_subcommand(cmd_decompose)) {
    try {
      if (wjf::is_known_form(target)) {
        target_series = wjf::make_form(target, prec24);
      } else {
        std::ifstream in(target);
        if (!in) {
          std::cerr << "error: cannot open " << target << "\n";
          return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        target_series = wjf::series_from_json(buf.str());
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (app.got_subcommand(cmd_expand)) {
      const wjf::JacobiSeries f = wjf::make_form(form_id, prec24);
      std::cout << (format == "json" ? wjf::to_json(f) : wjf::render_text(f))
                << "\n";
    } else if (app.got_subcommand(cmd_dim)) {
      std::cout << wjf::dim_weak(weight, m) << "\n";
    } else if (app.got_subcommand(cmd_weights)) {
      const wjf::LaurentPoly p = wjf::generator_weights(m);
      for (const auto& [e, c] : p.coefficients())
        std::cout << "t^" << e << ": " << c << "\n";
      if (p.is_zero()) std::cout << "0\n";
    } else if (app.got_subcommand(cmd_hilbert)) {
      std::cout << wjf::F_coefficient(ha, hb, hc).str() << "\n";
    } else if (app.got_subcommand(cmd_span)) {
      const auto catalog =
          even ? wjf::even_generator_catalog() : wjf::generator_catalog();
      const auto monomials = wjf::enumerate_monomials(weight, m, catalog);
      wjf::FormCache cache(prec24);
      std::vector<wjf::JacobiSeries> rows;
      rows.reserve(monomials.size());
      for (const auto& mono : monomials)
        rows.push_back(wjf::expand_monomial(mono, catalog, cache));
      std::cout << "monomials " << monomials.size() << "\n";
      std::cout << "rank " << wjf::span_rank(rows, prec24) << "\n";
      std::cout << "dim " << wjf::dim_weak(weight, m) << "\n";
    } else if (app.got_subcommand(cmd_decompose)) {
      const auto catalog = wjf::generator_catalog();
      const auto monomials = wjf::enumerate_monomials(weight, m, catalog);
      wjf::FormCache cache(prec24);
      const wjf::Decomposition d =
          wjf::decompose(target_series, monomials, catalog, cache, prec24);
      if (!d.ok) {
        const wjf::ExponentKey key =
            d.first_unmatched.value_or(wjf::ExponentKey{});
        std::cout << "no solution: first unmatched exponent n24=" << key.n24
                  << " r2=" << key.r2 << " s2=" << key.s2 << "\n";
        return 1;
      }
      bool any = false;
      for (std::size_t i = 0; i < d.monomials.size(); ++i) {
        if (d.coefficients[i] == 0) continue;
        std::cout << wjf::monomial_name(d.monomials[i], catalog) << ": "
                  << wjf::rational_str(d.coefficients[i]) << "\n";
        any = true;
      }
      if (!any) std::cout << "0\n";
    } else if (app.got_subcommand(cmd_verify)) {
      const auto results = wjf::run_acceptance(grid);
      std::size_t failed = 0;
      for (const auto& res : results) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << ": "
                  << res.detail << "\n";
        if (!res.pass) ++failed;
      }
      if (failed != 0) {
        std::cout << failed << " of " << results.size() << " checks failed\n";
        return 1;
      }
      std::cout << "all " << results.size() << " checks passed\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
