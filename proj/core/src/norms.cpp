#include "imexilw/norms.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace imexilw {

ErrorNorms error_norms(const std::vector<double>& errors, double cell_volume) {
  ErrorNorms n;
  double sum_sq = 0.0;
  for (double e : errors) {
    const double a = std::abs(e);
    n.l1 += a;
    sum_sq += a * a;
    n.linf = std::max(n.linf, a);
  }
  n.l1 *= cell_volume;
  n.l2 = std::sqrt(cell_volume * sum_sq);
  return n;
}

ErrorNorms error_norms(const Field1D& field, const Grid1D& grid, const std::function<State(double)>& exact,
                       int component, int exclude_left, int exclude_right) {
  std::vector<double> e;
  for (int j = exclude_left; j < grid.n - exclude_right; ++j) {
    e.push_back(field[j](component) - exact(grid.x(j))(component));
  }
  return error_norms(e, grid.dx);
}

ErrorNorms error_norms(const Field2D& field, const Grid2D& grid, const std::function<State(double, double)>& exact,
                       int component) {
  std::vector<double> e;
  e.reserve(grid.interior_count());
  for (const NodeIndex& p : grid.interior_nodes()) {
    e.push_back(field(p)(component) - exact(grid.x(p.i), grid.y(p.j))(component));
  }
  return error_norms(e, grid.dx * grid.dx);
}

double observed_order(double coarse, double fine) {
  if (coarse == fine) return 0.0;
  return std::log2(coarse / fine);
}

ConvergenceReport make_report(std::string name, std::vector<ConvergenceRow> rows) {
  ConvergenceReport r;
  r.name = std::move(name);
  r.rows = std::move(rows);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k + 1 < r.rows.size(); ++k) {
    const auto& c = r.rows[k];
    const auto& f = r.rows[k + 1];
    if (f.resolution != 2 * c.resolution) {
      r.orders.push_back({nan, nan, nan});
      continue;
    }
    r.orders.push_back({observed_order(c.errors.l1, f.errors.l1), observed_order(c.errors.l2, f.errors.l2),
                        observed_order(c.errors.linf, f.errors.linf)});
  }
  return r;
}

namespace {

std::string order_cell(const ConvergenceReport& r, std::size_t row, int which) {
  if (row == 0) return "";
  const double o = r.orders[row - 1][static_cast<std::size_t>(which)];
  if (std::isnan(o)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", o);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

}  // namespace

std::string format_report(const ConvergenceReport& r) {
  std::ostringstream os;
  char line[160];
  if (!r.name.empty()) os << r.name << '\n';
  std::snprintf(line, sizeof line, "%-8s %-10s %-6s %-10s %-6s %-10s %-6s\n", "dx", "L1 error", "order", "L2 error",
                "order", "Linf error", "order");
  os << line;
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    const std::string dx = "1/" + std::to_string(row.resolution);
    std::snprintf(line, sizeof line, "%-8s %-10s %-6s %-10s %-6s %-10s %-6s\n", dx.c_str(), sci(row.errors.l1).c_str(),
                  order_cell(r, k, 0).c_str(), sci(row.errors.l2).c_str(), order_cell(r, k, 1).c_str(),
                  sci(row.errors.linf).c_str(), order_cell(r, k, 2).c_str());
    os << line;
  }
  return os.str();
}

std::string report_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "resolution,dx,steps,l1,l1_order,l2,l2_order,linf,linf_order\n";
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    auto order = [&](int w) -> std::string {
      if (k == 0) return "";
      std::ostringstream o;
      o.precision(6);
      o << r.orders[k - 1][static_cast<std::size_t>(w)];
      return o.str();
    };
    os << row.resolution << ',' << row.dx << ',' << row.steps << ',' << row.errors.l1 << ',' << order(0) << ','
       << row.errors.l2 << ',' << order(1) << ',' << row.errors.linf << ',' << order(2) << '\n';
  }
  return os.str();
}

}  // namespace imexilw
