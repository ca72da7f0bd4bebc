#include "properties.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "generators.hpp"
#include "imexilw/extrapolation.hpp"
#include "imexilw/model.hpp"
#include "imexilw/stepper.hpp"
#include "imexilw/tableau.hpp"

namespace imexilw::acceptance {
namespace {

using testing::Gen;
using testing::kPropertyCases;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

PropertyResult bounded(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, "max defect " + sci(worst) + " (tol " + sci(tol) + ")"};
}

PropertyResult tableau_conditions() {
  const IMEXTableau t = ars_443();
  const std::array<Eigen::VectorXd, 2> weights = {t.w_tilde, t.w};
  const std::array<Eigen::VectorXd, 2> nodes = {t.c_tilde, t.c};
  const std::array<Eigen::MatrixXd, 2> mats = {t.a_tilde, t.a};
  double worst = 0.0;
  for (const auto& b : weights) {
    worst = std::max(worst, std::abs(b.sum() - 1.0));
    for (const auto& c : nodes) {
      worst = std::max(worst, std::abs(b.dot(c) - 0.5));
      for (const auto& d : nodes) {
        worst = std::max(worst, std::abs(b.dot(c.cwiseProduct(d)) - 1.0 / 3.0));
        for (const auto& m : mats) worst = std::max(worst, std::abs(b.dot(m * d) - 1.0 / 6.0));
      }
    }
  }
  const IMEXTableau s = ssp_rk3();
  worst = std::max({worst, std::abs(s.w_tilde.sum() - 1.0), std::abs(s.w_tilde.dot(s.c_tilde) - 0.5),
                    std::abs(s.w_tilde.dot(s.c_tilde.cwiseProduct(s.c_tilde)) - 1.0 / 3.0),
                    std::abs(s.w_tilde.dot(s.a_tilde * s.c_tilde) - 1.0 / 6.0)});
  return bounded("tableau order conditions", worst, 1e-14);
}

struct ModelCase {
  ModelPtr model;
  std::function<State(Gen&)> state;
  bool any_direction;
};

std::vector<ModelCase> model_cases() {
  auto euler = reactive_euler();
  return {
      {scalar_burgers_source(), [](Gen& g) { return g.scalar(-3.0, 3.0); }, false},
      {linear_advection(1.5), [](Gen& g) { return g.scalar(-3.0, 3.0); }, false},
      {linear_relaxation(0.5), [](Gen& g) { return g.pair(-2.0, 2.0); }, false},
      {nonlinear_relaxation(0.5), [](Gen& g) { return g.nonlinear_relax_state(); }, false},
      {euler, [euler](Gen& g) { return euler->conserved(g.euler_primitive()); }, true},
  };
}

std::vector<PropertyResult> model_properties() {
  double lr = 0.0, lar = 0.0, jac = 0.0;
  Gen g(101);
  for (const ModelCase& c : model_cases()) {
    const int m = c.model->components();
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Direction d = c.any_direction ? g.direction() : (g.integer(0, 1) ? kXDirection : Direction{-1.0, 0.0});
      const Eigensystem e = c.model->eigensystem(u, d);
      const Matrix a = c.model->flux_jacobian(u, d);
      const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
      lr = std::max(lr, (e.left * e.right - Matrix::Identity(m, m)).cwiseAbs().maxCoeff());
      const Matrix diag = e.eigenvalues.asDiagonal();
      lar = std::max(lar, (e.left * a * e.right - diag).cwiseAbs().maxCoeff() / scale);
      const Matrix fd = finite_difference_jacobian([&](const State& v) { return c.model->flux(v, d); }, u);
      jac = std::max(jac, (a - fd).cwiseAbs().maxCoeff() / scale);
      if (c.model->has_source()) {
        const Matrix s = c.model->source_jacobian(u);
        const Matrix sfd = finite_difference_jacobian([&](const State& v) { return c.model->source(v); }, u);
        jac = std::max(jac, (s - sfd).cwiseAbs().maxCoeff() / std::max(1.0, s.cwiseAbs().maxCoeff()));
      }
    }
  }
  return {bounded("L R = I, 100 states per model", lr, 1e-9),
          bounded("L A R diagonal, 100 states per model", lar, 1e-9),
          bounded("Jacobians vs finite differences (relative)", jac, 1e-5)};
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
  static const double nodes[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                  0.9061798459386640};
  static const double weights[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                    0.2369268850561891, 0.2369268850561891};
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) sum += weights[i] * f(0.5 * (a + b) + 0.5 * (b - a) * nodes[i]);
  return 0.5 * (b - a) * sum;
}

PropertyResult smoothness_indicators_property() {
  Gen g(102);
  double worst = 0.0;
  for (int k = 0; k < kPropertyCases; ++k) {
    const std::array<double, 3> v = {g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
    const double dx = g.uniform(1e-3, 0.4);
    const SmoothnessIndicators b = smoothness_indicators(v, dx);
    // nodes at 0, dx, 2 dx; integrals over [-dx, 0]
    const double s1 = (v[1] - v[0]) / dx;
    const double d2 = ((v[2] - v[1]) / dx - s1) / (2.0 * dx);
    const auto p1 = [&](double) { return s1; };
    const auto p2 = [&](double x) { return s1 + d2 * (2.0 * x - dx); };
    const double beta1 = gauss_legendre([&](double x) { return dx * p1(x) * p1(x); }, -dx, 0.0);
    const double beta2 = gauss_legendre([&](double x) { return dx * p2(x) * p2(x); }, -dx, 0.0) +
                         gauss_legendre([&](double) { return std::pow(dx, 3) * 4.0 * d2 * d2; }, -dx, 0.0);
    worst = std::max({worst, std::abs(b.beta0 - dx * dx),
                      std::abs(b.beta1 - beta1) / std::max(1.0, beta1),
                      std::abs(b.beta2 - beta2) / std::max(1.0, beta2)});
  }
  return bounded("smoothness indicators vs quadrature", worst, 1e-12);
}

double fitted_slope(const std::vector<double>& h, const std::vector<double>& e) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(e[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

PropertyResult extrapolation_orders() {
  const double xb = 0.3;
  const auto f = [](double x) { return std::sin(2.0 * x) + std::exp(x); };
  const double exact[3] = {f(xb), 2.0 * std::cos(2.0 * xb) + std::exp(xb), -4.0 * std::sin(2.0 * xb) + std::exp(xb)};
  double margin = 1e9;
  std::string detail = "slopes";
  for (int k = 0; k < 3; ++k) {
    double lowest = 1e9;
    for (double direction : {1.0, -1.0}) {
      std::vector<double> hs, errs;
      for (double dx = 0.02; dx > 0.0011; dx /= 2.0) {
        const double h = direction * dx;
        const double first = xb + 0.5 * h;
        hs.push_back(dx);
        errs.push_back(std::abs(weno_extrapolate({f(first), f(first + h), f(first + 2.0 * h)}, {first, h, xb}, k) -
                                exact[k]));
      }
      lowest = std::min(lowest, fitted_slope(hs, errs));
    }
    margin = std::min(margin, lowest - (2.7 - k));
    char buf[48];
    std::snprintf(buf, sizeof buf, " k=%d: %.2f (min %.1f)", k, lowest, 2.7 - k);
    detail += buf;
  }
  return {"extrapolation order slopes", margin >= 0.0, detail};
}

State one(double v) {
  State s(1);
  s(0) = v;
  return s;
}

PropertyResult freestream_1d() {
  auto euler = reactive_euler();
  const State u0 = euler->conserved({1.3, 0.0, 0.0, 2.0, 0.0});
  const Grid1D g = build_grid_1d(0.0, 1.0, 30, 0.5, 0.7);
  double worst = 0.0;
  for (Splitting s : {Splitting::Componentwise, Splitting::Characteristic}) {
    SolverOptions opts;
    opts.discretization.splitting = s;
    Solver1D solver(euler, g, ars_443(), wall_relation(5), wall_relation(5), opts);
    solver.set_initial([&](double) { return u0; });
    for (int k = 0; k < 10; ++k) solver.step(solver.compute_dt(0.8));
    for (int j = 0; j < g.n; ++j) worst = std::max(worst, (solver.solution()[j] - u0).cwiseAbs().maxCoeff());
  }
  const Grid1D h = build_grid_1d(0.0, 1.0, 40, 0.3, 0.6);
  Solver1D scalar(linear_advection(1.0), h, ars_443(),
                  prescribe_component(0, 1, [](double) { return 1.7; }, [](double) { return 0.0; }),
                  extrapolation_relation());
  scalar.set_initial([](double) { return one(1.7); });
  for (int k = 0; k < 10; ++k) scalar.step(scalar.compute_dt(0.8));
  for (int j = 0; j < h.n; ++j) worst = std::max(worst, std::abs(scalar.solution()[j](0) - 1.7) / 1.7);
  return bounded("1D freestream over 10 steps (relative)", worst / u0.cwiseAbs().maxCoeff(), 1e-12);
}

PropertyResult freestream_2d() {
  auto euler = reactive_euler();
  double worst = 0.0;
  const auto conditions = [](const Grid2D& g, const FaceCondition& left) {
    std::vector<FaceCondition> out;
    for (const Face& f : g.faces()) {
      if (f.owner >= 0 || f.edge == Edge::YLow) {
        out.push_back(wall_condition(5));
      } else if (f.edge == Edge::XLow) {
        out.push_back(left);
      } else {
        out.push_back(outflow_copy_condition());
      }
    }
    return out;
  };
  {
    const State u0 = euler->conserved({1.0, 0.0, 0.0, 1.0, 0.0});
    const Grid2D g = build_grid_2d({0.0, 2.0, 0.0, 2.0}, {{0.5, 1.0, 0.0, 0.5}}, 0.1, 0.5);
    Solver2D solver(euler, g, ars_443(), conditions(g, wall_condition(5)));
    solver.set_initial([&](double, double) { return u0; });
    for (int k = 0; k < 10; ++k) solver.step(solver.compute_dt(0.8));
    for (const auto& p : g.interior_nodes()) {
      worst = std::max(worst, (solver.solution()(p) - u0).cwiseAbs().maxCoeff() / u0.cwiseAbs().maxCoeff());
    }
  }
  {
    const State u0 = euler->conserved({1.0, 0.6, 0.0, 1.0, 0.0});
    const Grid2D g = build_grid_2d({0.0, 1.0, 0.0, 1.0}, {}, 0.05, 0.5);
    Solver2D solver(euler, g, ars_443(), conditions(g, inflow_state_condition(u0)));
    solver.set_initial([&](double, double) { return u0; });
    for (int k = 0; k < 10; ++k) solver.step(solver.compute_dt(0.8));
    for (const auto& p : g.interior_nodes()) {
      worst = std::max(worst, (solver.solution()(p) - u0).cwiseAbs().maxCoeff() / u0.cwiseAbs().maxCoeff());
    }
  }
  return bounded("2D freestream over 10 steps (relative)", worst, 1e-12);
}

PropertyResult periodic_conservation() {
  double worst = 0.0;
  {
    const Grid1D g = build_grid_1d(0.0, 1.0, 50, 0.5, 0.5);
    Solver1D solver(linear_advection(1.0), g, ars_443(), periodic_relation(), periodic_relation());
    solver.set_initial([](double x) { return one(1.0 + 0.5 * std::sin(2.0 * std::numbers::pi * x)); });
    const auto total = [&] {
      double s = 0.0;
      for (int j = 0; j < g.n; ++j) s += solver.solution()[j](0);
      return s * g.dx;
    };
    double before = total();
    for (int k = 0; k < 20; ++k) {
      solver.step(solver.compute_dt(0.8));
      const double after = total();
      worst = std::max(worst, std::abs(after - before));
      before = after;
    }
  }
  {
    auto euler = reactive_euler();
    const Grid2D g = build_grid_2d({0.0, 1.0, 0.0, 1.0}, {}, 0.05, 0.5);
    SolverOptions opts;
    opts.discretization.splitting = Splitting::Characteristic;
    Solver2D solver(euler, g, ars_443(), std::vector<FaceCondition>(g.faces().size(), periodic_condition()), opts);
    const double k = 2.0 * std::numbers::pi;
    solver.set_initial([&](double x, double y) {
      return euler->conserved({1.0 + 0.3 * std::sin(k * (x + y)), 1.0, -0.5, 1.0 + 0.1 * std::cos(k * x), 0.0});
    });
    const auto totals = [&] {
      State s = State::Zero(5);
      for (const auto& p : g.interior_nodes()) s += solver.solution()(p);
      return State(s * g.dx * g.dx);
    };
    State before = totals();
    for (int n = 0; n < 10; ++n) {
      solver.step(solver.compute_dt(0.8));
      const State after = totals();
      for (int c = 0; c < 4; ++c) {
        worst = std::max(worst, std::abs(after(c) - before(c)) / std::max(1.0, std::abs(before(c))));
      }
      before = after;
    }
  }
  return bounded("periodic conservation per step", worst, 1e-12);
}

}  // namespace

std::vector<PropertyResult> run_property_suites() {
  std::vector<PropertyResult> out;
  out.push_back(tableau_conditions());
  for (PropertyResult& r : model_properties()) out.push_back(std::move(r));
  out.push_back(smoothness_indicators_property());
  out.push_back(extrapolation_orders());
  out.push_back(freestream_1d());
  out.push_back(freestream_2d());
  out.push_back(periodic_conservation());
  return out;
}

}  // namespace imexilw::acceptance
