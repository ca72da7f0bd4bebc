#pragma once

#include <vector>

#include "imexilw/grid.hpp"
#include "imexilw/model.hpp"
#include "imexilw/types.hpp"

namespace imexilw {

struct DiscretizationOptions {
  Splitting splitting = Splitting::Componentwise;
  double weno_epsilon = 1e-6;
  double min_speed = 1e-12;
};

// Upwind-biased third-order reconstruction at x_{i+1/2} from v_{i-1}, v_i, v_{i+1}.
double weno3_interface_value(double vm1, double v0, double vp1, double epsilon = 1e-6);

double global_alpha(const Field1D& field, const Model& model, const DiscretizationOptions& opts = {});
double global_alpha(const Field2D& field, const Grid2D& grid, const Model& model, Direction dir,
                    const DiscretizationOptions& opts = {});

// Divergence of the direction-dir flux along one grid line. line holds count nodes;
// entries 2 .. count-3 are interior and receive out[k - 2].
void line_divergence(const State* line, int count, const Model& model, Direction dir, double alpha, double dx,
                     const DiscretizationOptions& opts, State* out);

void spatial_divergence(const Field1D& field, const Model& model, const Grid1D& grid, double alpha,
                        const DiscretizationOptions& opts, Field1D& out);

// Adds (accumulate) or writes the divergence along dir (kXDirection or kYDirection) at interior nodes.
void spatial_divergence(const Field2D& field, const Model& model, const Grid2D& grid, Direction dir,
                        double alpha, const DiscretizationOptions& opts, Field2D& out, bool accumulate);

}  // namespace imexilw
