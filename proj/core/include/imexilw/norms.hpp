#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "imexilw/grid.hpp"
#include "imexilw/types.hpp"

namespace imexilw {

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

// Cell-volume weighted discrete norms of pointwise errors.
ErrorNorms error_norms(const std::vector<double>& errors, double cell_volume);

// Errors of one component over interior nodes, skipping exclude_left / exclude_right
// nodes nearest the respective ends.
ErrorNorms error_norms(const Field1D& field, const Grid1D& grid, const std::function<State(double)>& exact,
                       int component, int exclude_left = 0, int exclude_right = 0);
ErrorNorms error_norms(const Field2D& field, const Grid2D& grid, const std::function<State(double, double)>& exact,
                       int component);

// log2(coarse / fine); zero when the errors agree.
double observed_order(double coarse, double fine);

struct ConvergenceRow {
  int resolution = 0;  // 1 / dx
  double dx = 0.0;
  ErrorNorms errors;
  int steps = 0;
};

struct ConvergenceReport {
  std::string name;
  std::vector<ConvergenceRow> rows;
  // orders[k] compares rows k and k+1; NaN unless the spacing halves.
  std::vector<std::array<double, 3>> orders;
};

ConvergenceReport make_report(std::string name, std::vector<ConvergenceRow> rows);

// Table with columns dx, L1 error, order, L2 error, order, Linf error, order.
std::string format_report(const ConvergenceReport& report);
std::string report_csv(const ConvergenceReport& report);

}  // namespace imexilw
