#include <cmath>
#include <limits>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/grid.hpp"

namespace imexilw {

Grid1D build_grid_1d(double a, double b, int n, double eta_left, double eta_right) {
  if (!(b > a)) throw Error(ErrorCode::ConfigError, "domain requires b > a");
  if (n < 6) {
    std::ostringstream msg;
    msg << "at least 6 interior nodes are required, got " << n;
    throw Error(ErrorCode::TooFewNodes, msg.str());
  }
  if (!(eta_left > 0.0 && eta_left < 1.0) || !(eta_right > 0.0 && eta_right < 1.0)) {
    throw Error(ErrorCode::InvalidEta, "boundary offsets must lie in (0, 1)");
  }
  Grid1D g;
  g.a = a;
  g.b = b;
  g.n = n;
  g.eta_left = eta_left;
  g.eta_right = eta_right;
  g.dx = (b - a) / (n + eta_left + eta_right - 1.0);
  return g;
}

Field1D::Field1D(int n, int m) : n_(n), m_(m), data_(static_cast<std::size_t>(n + 2 * kGhostLayers)) {
  for (auto& s : data_) s = State::Zero(m);
  invalidate_ghosts();
}

void Field1D::invalidate_ghosts() {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= kGhostLayers; ++k) {
    (*this)[-k] = State::Constant(m_, nan);
    (*this)[n_ - 1 + k] = State::Constant(m_, nan);
  }
}

bool Field1D::ghosts_valid() const {
  for (int k = 1; k <= kGhostLayers; ++k) {
    if (!(*this)[-k].allFinite() || !(*this)[n_ - 1 + k].allFinite()) return false;
  }
  return true;
}

}  // namespace imexilw
