#include "imexilw/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

double weno3_interface_value(double vm1, double v0, double vp1, double epsilon) {
  const double q0 = -0.5 * vm1 + 1.5 * v0;
  const double q1 = 0.5 * v0 + 0.5 * vp1;
  const double b0 = (v0 - vm1) * (v0 - vm1);
  const double b1 = (vp1 - v0) * (vp1 - v0);
  const double a0 = (1.0 / 3.0) / ((epsilon + b0) * (epsilon + b0));
  const double a1 = (2.0 / 3.0) / ((epsilon + b1) * (epsilon + b1));
  return (a0 * q0 + a1 * q1) / (a0 + a1);
}

double global_alpha(const Field1D& field, const Model& model, const DiscretizationOptions& opts) {
  double alpha = 0.0;
  for (int j = 0; j < field.size(); ++j) alpha = std::max(alpha, model.max_speed(field[j], kXDirection));
  return alpha > 0.0 ? alpha : opts.min_speed;
}

double global_alpha(const Field2D& field, const Grid2D& grid, const Model& model, Direction dir,
                    const DiscretizationOptions& opts) {
  double alpha = 0.0;
  for (const auto& p : grid.interior_nodes()) alpha = std::max(alpha, model.max_speed(field(p), dir));
  return alpha > 0.0 ? alpha : opts.min_speed;
}

void line_divergence(const State* line, int count, const Model& model, Direction dir, double alpha, double dx,
                     const DiscretizationOptions& opts, State* out) {
  const int m = static_cast<int>(line[0].size());
  for (int k : {0, 1, count - 2, count - 1}) {
    if (!line[k].allFinite()) throw Error(ErrorCode::MissingGhostData, "ghost values are not populated");
  }
  std::vector<State> fp(static_cast<std::size_t>(count));
  std::vector<State> fm(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const State f = model.flux(line[k], dir);
    fp[static_cast<std::size_t>(k)] = 0.5 * (f + alpha * line[k]);
    fm[static_cast<std::size_t>(k)] = 0.5 * (f - alpha * line[k]);
  }
  const double eps = opts.weno_epsilon;
  // interface k sits between nodes k and k+1
  std::vector<State> fhat(static_cast<std::size_t>(count));
  for (int k = 1; k <= count - 3; ++k) {
    const auto s = [](int i) { return static_cast<std::size_t>(i); };
    State h(m);
    if (opts.splitting == Splitting::Componentwise) {
      for (int c = 0; c < m; ++c) {
        h(c) = weno3_interface_value(fp[s(k - 1)](c), fp[s(k)](c), fp[s(k + 1)](c), eps) +
               weno3_interface_value(fm[s(k + 2)](c), fm[s(k + 1)](c), fm[s(k)](c), eps);
      }
    } else {
      const State mean = 0.5 * (line[k] + line[k + 1]);
      const Eigensystem e = model.eigensystem(mean, dir);
      State wp[3];
      State wm[3];
      for (int r = 0; r < 3; ++r) {
        wp[r] = e.left * fp[s(k - 1 + r)];
        wm[r] = e.left * fm[s(k + 2 - r)];
      }
      State g(m);
      for (int c = 0; c < m; ++c) {
        g(c) = weno3_interface_value(wp[0](c), wp[1](c), wp[2](c), eps) +
               weno3_interface_value(wm[0](c), wm[1](c), wm[2](c), eps);
      }
      h = e.right * g;
    }
    fhat[s(k)] = h;
  }
  for (int k = 2; k <= count - 3; ++k) {
    out[k - 2] = (fhat[static_cast<std::size_t>(k)] - fhat[static_cast<std::size_t>(k - 1)]) / dx;
  }
}

void spatial_divergence(const Field1D& field, const Model& model, const Grid1D& grid, double alpha,
                        const DiscretizationOptions& opts, Field1D& out) {
  const int count = field.size() + 2 * kGhostLayers;
  line_divergence(&field[-kGhostLayers], count, model, kXDirection, alpha, grid.dx, opts, &out[0]);
}

void spatial_divergence(const Field2D& field, const Model& model, const Grid2D& grid, Direction dir,
                        double alpha, const DiscretizationOptions& opts, Field2D& out, bool accumulate) {
  const bool along_x = dir.nx != 0.0;
  const int lines = along_x ? grid.ny : grid.nx;
  const int length = along_x ? grid.nx : grid.ny;
  std::vector<State> buffer;
  std::vector<State> result;
  for (int l = 0; l < lines; ++l) {
    auto node = [&](int s) { return along_x ? NodeIndex{s, l} : NodeIndex{l, s}; };
    int s = 0;
    while (s < length) {
      while (s < length && grid.type(node(s).i, node(s).j) != NodeType::Interior) ++s;
      if (s >= length) break;
      int e = s;
      while (e < length && grid.type(node(e).i, node(e).j) == NodeType::Interior) ++e;
      const int count = e - s + 2 * kGhostLayers;
      buffer.resize(static_cast<std::size_t>(count));
      result.resize(static_cast<std::size_t>(e - s));
      for (int k = 0; k < count; ++k) {
        const NodeIndex p = node(s - kGhostLayers + k);
        if (grid.type(p.i, p.j) == NodeType::Unused) {
          std::ostringstream msg;
          msg << "stencil node (" << p.i << ", " << p.j << ") is not a ghost node";
          throw Error(ErrorCode::MissingGhostData, msg.str());
        }
        buffer[static_cast<std::size_t>(k)] = field(p);
      }
      line_divergence(buffer.data(), count, model, dir, alpha, grid.dx, opts, result.data());
      for (int k = s; k < e; ++k) {
        State& target = out(node(k));
        if (accumulate) {
          target += result[static_cast<std::size_t>(k - s)];
        } else {
          target = result[static_cast<std::size_t>(k - s)];
        }
      }
      s = e;
    }
  }
}

}  // namespace imexilw
