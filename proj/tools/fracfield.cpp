// fracfield command-line interface: eval, solve, verify.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "fracfield/error.hpp"
#include "fracfield/foxh.hpp"
#include "fracfield/json_io.hpp"
#include "fracfield/solver.hpp"
#include "fracfield/specfun.hpp"
#include "fracfield/verify.hpp"

using namespace fracfield;

namespace {

enum Exit { ok = 0, verify_failed = 1, bad_input = 2, numeric = 3 };

void print_value(cplx v, double bound) {
  nlohmann::json j = {{"re", v.real()}, {"im", v.imag()}, {"trunc_bound", bound}};
  std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracfield: fractional field equations and their special functions"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a special function");
  eval->require_subcommand(1);
  double zr = 0, zi = 0;

  auto* ml = eval->add_subcommand("ml", "Mittag-Leffler E^{gamma,kappa}_{alpha,beta}(z)");
  MLParams mp;
  ml->add_option("--alpha", mp.alpha)->required();
  ml->add_option("--beta", mp.beta)->required();
  ml->add_option("--gamma", mp.gamma);
  ml->add_option("--kappa", mp.kappa_ml);
  ml->add_option("--z", zr, "real part of z")->required();
  ml->add_option("--zi", zi, "imaginary part of z");

  auto* wr = eval->add_subcommand("wright", "Wright function phi(a, b; z)");
  double wa = 0, wb = 0;
  wr->add_option("--a", wa)->required();
  wr->add_option("--b", wb)->required();
  wr->add_option("--z", zr)->required();
  wr->add_option("--zi", zi);

  auto* fh = eval->add_subcommand("foxh", "Fox H-function from a JSON spec");
  std::string spec_path;
  double xr = 0;
  fh->add_option("--spec", spec_path)->required();
  auto* zopt = fh->add_option("--z", zr, "argument of the bare H-function");
  fh->add_option("--zi", zi);
  auto* xopt = fh->add_option("--x", xr, "physical argument (applies the spec's maps)");
  zopt->excludes(xopt);

  // solve
  auto* solve = app.add_subcommand("solve", "evaluate a solution on a grid, write CSV");
  std::string prob_path, grid_path, out_path, method = "auto";
  double tol = 0;
  bool regularize = false;
  int threads = 0;
  solve->add_option("--problem", prob_path)->required();
  solve->add_option("--grid", grid_path)->required();
  solve->add_option("--out", out_path)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"auto", "pointwise", "closed_form", "series"}));
  solve->add_option("--tol", tol, "relative tolerance of the pointwise inversion");
  solve->add_flag("--regularize", regularize, "allow regularized pointwise inversion for delta data");
  solve->add_option("--threads", threads);

  // verify
  auto* ver = app.add_subcommand("verify", "run verification suites, print a JSON report");
  std::string suite;
  double vtol = 0;
  std::uint64_t seed = verify::Options{}.seed;
  ver->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"identities", "laplace_pairs", "lemmas", "hfunction", "solutions", "all"}));
  ver->add_option("--tol", vtol, "replace every check's tolerance");
  ver->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (ml->parsed()) {
      SeriesValue v = ml_four_eval(mp, {zr, zi});
      print_value(v.value, v.trunc_bound);
    } else if (wr->parsed()) {
      SeriesValue v = wright_eval(wa, wb, {zr, zi});
      print_value(v.value, v.trunc_bound);
    } else if (fh->parsed()) {
      HFunctionSpec s = hspec_from_json(read_json_file(spec_path));
      if (xopt->count()) {
        SeriesValue v = h_series_eval(s, xr);
        print_value(v.value, v.trunc_bound);
      } else {
        if (!zopt->count()) throw ValidityError("eval foxh needs --z or --x");
        ScaledValue v = h_bare_series(s, {zr, zi});
        cplx val = v.value.value();
        print_value(val, v.rel_bound * std::abs(val));
      }
    } else if (solve->parsed()) {
      ProblemSpec p = problem_from_json(read_json_file(prob_path));
      GridSpec g = grid_from_json(read_json_file(grid_path));
      SolveOptions o;
      if (tol > 0) o.rel_tol = tol;
      o.regularize_delta = regularize;
      o.threads = threads;
      auto rows = solve_grid(p, g, method_from_string(method), o);
      std::ofstream out(out_path);
      if (!out) throw ValidityError("cannot write '" + out_path + "'");
      write_csv(out, rows);
      std::size_t failed = 0;
      double max_imag = 0;
      for (const auto& r : rows) {
        if (!r.error_flag.empty()) ++failed;
        else max_imag = std::max(max_imag, std::abs(r.imag_residual));
      }
      std::fprintf(stderr, "points=%zu failures=%zu max_imag_residual=%.3g\n", rows.size(), failed, max_imag);
      if (!rows.empty() && failed == rows.size()) return numeric;
    } else if (ver->parsed()) {
      verify::Options o;
      o.seed = seed;
      o.tol_override = vtol;
      auto checks = verify::run_suite(suite, o);
      auto rep = verify::report(suite, o, checks);
      std::cout << rep.dump(2) << "\n";
      return rep["failed"].get<int>() == 0 ? ok : verify_failed;
    }
  } catch (const ValidityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error (" << current_error_name() << "): " << e.what() << "\n";
    return numeric;
  }
  return ok;
}
