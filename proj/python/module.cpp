#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fracfield/error.hpp"
#include "fracfield/json_io.hpp"
#include "fracfield/solver.hpp"
#include "fracfield/specfun.hpp"
#include "fracfield/verify.hpp"

namespace py = pybind11;
using namespace fracfield;

// Structured arguments cross the boundary as JSON text; the Python side
// serializes dicts.
PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "FracfieldError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
  py::register_exception<NoClosedForm>(m, "NoClosedForm", base.ptr());
  py::register_exception<NoSeriesForm>(m, "NoSeriesForm", base.ptr());
  py::register_exception<OutOfRegime>(m, "OutOfRegime", base.ptr());

  m.def(
      "ml",
      [](double alpha, double beta, cplx z, double gamma, double kappa) {
        return ml_four(MLParams{alpha, beta, gamma, kappa}, z);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("z"), py::arg("gamma") = 1.0, py::arg("kappa") = 1.0);
  m.def(
      "wright", [](double a, double b, cplx z) { return wright(a, b, z); }, py::arg("a"), py::arg("b"),
      py::arg("z"));
  m.def(
      "foxh",
      [](const std::string& spec, cplx x) { return h_series(hspec_from_json(json::parse(spec)), x); },
      py::arg("spec_json"), py::arg("x"));
  m.def(
      "ml_as_h_json", [](double a, double b) { return hspec_to_json(ml_as_h(a, b)).dump(); },
      py::arg("alpha"), py::arg("beta"));

  m.def(
      "solve_grid",
      [](const std::string& problem, const std::string& grid, const std::string& method, bool regularize,
         int threads) {
        ProblemSpec p = problem_from_json(json::parse(problem));
        GridSpec g = grid_from_json(json::parse(grid));
        SolveOptions o;
        o.regularize_delta = regularize;
        o.threads = threads;
        std::vector<GridRow> rows;
        {
          py::gil_scoped_release nogil;
          rows = solve_grid(p, g, method_from_string(method), o);
        }
        py::list out;
        for (const auto& r : rows)
          out.append(py::make_tuple(r.x, r.y, r.N, r.imag_residual, r.method, r.error_flag));
        return out;
      },
      py::arg("problem_json"), py::arg("grid_json"), py::arg("method") = "auto",
      py::arg("regularize") = false, py::arg("threads") = 0);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        verify::Options o;
        o.seed = seed;
        std::vector<verify::Check> checks;
        {
          py::gil_scoped_release nogil;
          checks = verify::run_suite(suite, o);
        }
        return verify::report(suite, o, checks).dump();
      },
      py::arg("suite"), py::arg("seed") = verify::Options{}.seed);
}
