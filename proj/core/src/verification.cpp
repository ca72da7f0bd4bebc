#include "imexilw/verification.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "imexilw/boundary1d.hpp"
#include "imexilw/local_system.hpp"
#include "imexilw/relation.hpp"
#include "imexilw/tableau.hpp"

namespace imexilw {

namespace {

State scalar(double v) {
  State s(1);
  s(0) = v;
  return s;
}

std::array<State, 3> samples_at(const std::function<double(double)>& u, double dx, double eta) {
  return {scalar(u(eta * dx)), scalar(u((1.0 + eta) * dx)), scalar(u((2.0 + eta) * dx))};
}

double max_diff(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

std::array<double, 3> ilw_stage_values(const Model& model, const BoundarySignal& s, double t_n, double dt) {
  const IMEXTableau tab = ssp_rk3();
  const LocalSystem sys(model, make_frame(std::numbers::pi));
  const double g = s.g(t_n);
  const double dg = s.dg(t_n);
  const double ddg = s.ddg ? s.ddg(t_n) : 0.0;
  const double f1 = s.df(g);
  const double f2 = s.ddf ? s.ddf(g) : 0.0;
  const double ux = -dg / f1;
  const double uxx = (f1 * ddg - 2.0 * f2 * dg * dg) / (f1 * f1 * f1);

  // The local normal points along -x: odd derivatives flip sign and the normal flux is -f.
  BoundaryStageCache cache;
  cache.level_value = scalar(g);
  cache.level_first = scalar(-ux);
  cache.level_second = scalar(uxx);
  const State zero = scalar(0.0);
  const State fs0 = scalar(-(f2 * ux * ux + f1 * uxx));
  cache.stages.push_back(make_stage_record(sys, cache.level_value, cache.level_first, zero, fs0));

  const State v1 = stage_boundary_value(cache, tab, 1, sys, dt);
  const State d1 = stage_boundary_derivative(cache, tab, 1, sys, dt, v1);
  // Stage 2 needs only the value and first derivative of stage 1.
  cache.stages.push_back(make_stage_record(sys, v1, d1, zero, zero));
  const State v2 = stage_boundary_value(cache, tab, 2, sys, dt);
  return {g, v1(0), v2(0)};
}

std::array<double, 3> weno_stage_values_linear(const BoundarySignal& s, double t_n, double dt, double dx, double eta) {
  const IMEXTableau tab = ssp_rk3();
  const ModelPtr model = linear_advection(1.0);
  const LocalSystem sys(*model, make_frame(std::numbers::pi));
  const BoundaryRelation rel = prescribe_component(0, 1, s.g, s.dg);
  BoundaryPoint point(sys, rel, ExtrapolationStencil{-eta * dx, -dx, 0.0});

  auto g = s.g;
  auto dg = s.dg;
  auto ddg = s.ddg;
  // Exact SSP-RK3 stage functions of u(t, x) = g(t - x).
  auto u0 = [&](double x) { return g(t_n - x); };
  auto u1 = [&](double x) { return g(t_n - x) + dt * dg(t_n - x); };
  auto u2 = [&](double x) {
    return g(t_n - x) + 0.5 * dt * dg(t_n - x) + 0.25 * dt * dt * ddg(t_n - x);
  };
  const State zero = scalar(0.0);
  const auto level = samples_at(u0, dx, eta);
  point.begin_level(level);
  point.solve_level(t_n, zero);
  point.begin_stage(0, level);
  point.solve_stage(0, tab, dt, zero, zero);
  point.begin_stage(1, samples_at(u1, dx, eta));
  point.solve_stage(1, tab, dt, zero, zero);
  const double v1 = point.value()(0);
  point.begin_stage(2, samples_at(u2, dx, eta));
  point.solve_stage(2, tab, dt, zero, zero);
  return {point.cache().level_value(0), v1, point.value()(0)};
}

std::vector<OracleRow> oracle_study(int levels, double dt0, double cfl) {
  BoundarySignal lin;
  lin.g = [](double t) { return std::sin(t); };
  lin.dg = [](double t) { return std::cos(t); };
  lin.ddg = [](double t) { return -std::sin(t); };
  lin.df = [](double) { return 1.0; };
  lin.ddf = [](double) { return 0.0; };

  // Burgers flux u^2/2 with inflow data bounded away from zero.
  BoundarySignal burg;
  burg.g = [](double t) { return 2.0 + std::sin(t); };
  burg.dg = [](double t) { return std::cos(t); };
  burg.ddg = [](double t) { return -std::sin(t); };
  burg.df = [](double u) { return u; };
  burg.ddf = [](double) { return 1.0; };
  const ModelPtr burgers = scalar_law(
      "burgers", [](double u) { return 0.5 * u * u; }, [](double u) { return u; });
  const ModelPtr advection = linear_advection(1.0);

  const double t_n = 0.3;
  std::vector<OracleRow> rows;
  double dt = dt0;
  for (int k = 0; k < levels; ++k, dt *= 0.5) {
    OracleRow r;
    r.dt = dt;
    const auto reference = carpenter_linear(lin, t_n, dt);
    r.ilw_linear = max_diff(ilw_stage_values(*advection, lin, t_n, dt), reference);
    r.weno_linear = max_diff(weno_stage_values_linear(lin, t_n, dt, dt / cfl), reference);
    const auto nl = ilw_stage_values(*burgers, burg, t_n, dt);
    const auto nl_ref = carpenter_nonlinear(burg, t_n, dt);
    r.nonlinear_stage1 = std::abs(nl[1] - nl_ref[1]);
    r.nonlinear_stage2 = std::abs(nl[2] - nl_ref[2]);
    rows.push_back(r);
  }
  return rows;
}

std::string format_oracle_study(const std::vector<OracleRow>& rows) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof line, "%-10s %-12s %-12s %-6s %-14s %-14s\n", "dt", "linear ILW", "linear WENO",
                "order", "nonlinear s1", "nonlinear s2");
  os << line;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    std::string order = "";
    if (k > 0 && r.weno_linear > 0.0) {
      char b[16];
      std::snprintf(b, sizeof b, "%.2f", std::log2(rows[k - 1].weno_linear / r.weno_linear));
      order = b;
    }
    std::snprintf(line, sizeof line, "%-10.4g %-12.3e %-12.3e %-6s %-14.3e %-14.3e\n", r.dt, r.ilw_linear,
                  r.weno_linear, order.c_str(), r.nonlinear_stage1, r.nonlinear_stage2);
    os << line;
  }
  return os.str();
}

}  // namespace imexilw
