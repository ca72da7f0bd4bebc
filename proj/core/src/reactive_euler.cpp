#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/model.hpp"

namespace imexilw {

namespace {

constexpr int kScalarNewtonMaxIterations = 100;

void throw_nonphysical(const char* what, const State& u, double rho, double p) {
  std::ostringstream msg;
  msg << what << ": rho = " << rho << ", p = " << p << ", state = " << u.transpose();
  throw Error(ErrorCode::NonphysicalState, msg.str());
}

}  // namespace

ReactiveEuler::ReactiveEuler(EulerParameters params) : params_(params) {
  if (!(params.gamma > 1.0) || !(params.q > 0.0) || !(params.t_act > 0.0) || !(params.k_rate > 0.0)) {
    throw Error(ErrorCode::ConfigError, "reactive Euler parameters require gamma > 1 and q, T_act, K_rate > 0");
  }
}

double ReactiveEuler::pressure(const State& u) const {
  const double kinetic = 0.5 * (u(1) * u(1) + u(2) * u(2)) / u(0);
  return (params_.gamma - 1.0) * (u(3) - kinetic - params_.q * u(4));
}

double ReactiveEuler::temperature(const State& u) const {
  const double p = pressure(u);
  if (!(u(0) > 0.0) || !(p > 0.0)) throw_nonphysical("temperature of nonphysical state", u, u(0), p);
  return p / u(0);
}

double ReactiveEuler::sound_speed(const State& u) const {
  const double p = pressure(u);
  if (!(u(0) > 0.0) || !(p > 0.0)) throw_nonphysical("sound speed of nonphysical state", u, u(0), p);
  return std::sqrt(params_.gamma * p / u(0));
}

double ReactiveEuler::total_energy(const Primitive& w) const {
  return 0.5 * w.rho * (w.u * w.u + w.v * w.v) + w.p / (params_.gamma - 1.0) + w.rho * params_.q * w.Y;
}

State ReactiveEuler::conserved(const Primitive& w) const {
  State u(5);
  u << w.rho, w.rho * w.u, w.rho * w.v, total_energy(w), w.rho * w.Y;
  return u;
}

Primitive ReactiveEuler::primitive(const State& u) const {
  Primitive w;
  w.rho = u(0);
  w.u = u(1) / u(0);
  w.v = u(2) / u(0);
  w.p = pressure(u);
  w.Y = u(4) / u(0);
  return w;
}

State ReactiveEuler::flux(const State& u, Direction dir) const {
  const double rho = u(0);
  const double un = (u(1) * dir.nx + u(2) * dir.ny) / rho;
  const double p = pressure(u);
  State f(5);
  f << rho * un, u(1) * un + p * dir.nx, u(2) * un + p * dir.ny, (u(3) + p) * un, u(4) * un;
  return f;
}

Matrix ReactiveEuler::flux_jacobian(const State& u, Direction dir) const {
  const double g = params_.gamma - 1.0;
  const double rho = u(0);
  const double vx = u(1) / rho;
  const double vy = u(2) / rho;
  const double un = vx * dir.nx + vy * dir.ny;
  const double k = 0.5 * (vx * vx + vy * vy);
  const double p = pressure(u);
  const double h = (u(3) + p) / rho;
  const double y = u(4) / rho;

  Eigen::Matrix<double, 1, 5> p_u;
  p_u << g * k, -g * vx, -g * vy, g, -g * params_.q;
  Eigen::Matrix<double, 1, 5> w;
  w << -un, dir.nx, dir.ny, 0.0, 0.0;

  Matrix a = Matrix::Zero(5, 5);
  a.row(0) = w;
  a(0, 0) = 0.0;
  a.row(1) = vx * w + dir.nx * p_u;
  a(1, 1) += un;
  a.row(2) = vy * w + dir.ny * p_u;
  a(2, 2) += un;
  a.row(3) = h * w + un * p_u;
  a(3, 3) += un;
  a.row(4) = y * w;
  a(4, 4) += un;
  return a;
}

Eigensystem ReactiveEuler::eigensystem(const State& u, Direction dir) const {
  const double g = params_.gamma - 1.0;
  const double rho = u(0);
  const double p = pressure(u);
  if (!(rho > 0.0) || !(p > 0.0)) throw_nonphysical("eigensystem of nonphysical state", u, rho, p);
  const double vx = u(1) / rho;
  const double vy = u(2) / rho;
  const double nx = dir.nx;
  const double ny = dir.ny;
  const double tx = -ny;
  const double ty = nx;
  const double un = vx * nx + vy * ny;
  const double ut = vx * tx + vy * ty;
  const double k = 0.5 * (vx * vx + vy * vy);
  const double c2 = params_.gamma * p / rho;
  const double c = std::sqrt(c2);
  const double h = (u(3) + p) / rho;
  const double y = u(4) / rho;
  const double q = params_.q;

  Eigensystem e;
  e.eigenvalues.resize(5);
  e.eigenvalues << un - c, un, un, un, un + c;

  e.right.resize(5, 5);
  e.right.col(0) << 1.0, vx - c * nx, vy - c * ny, h - c * un, y;
  e.right.col(1) << 1.0, vx, vy, k + q * y, y;
  e.right.col(2) << 0.0, tx, ty, ut, 0.0;
  e.right.col(3) << 0.0, 0.0, 0.0, q, 1.0;
  e.right.col(4) << 1.0, vx + c * nx, vy + c * ny, h + c * un, y;

  Eigen::Matrix<double, 1, 5> p_u;
  p_u << g * k, -g * vx, -g * vy, g, -g * q;
  Eigen::Matrix<double, 1, 5> acoustic;
  acoustic << un, -nx, -ny, 0.0, 0.0;

  e.left.resize(5, 5);
  e.left.row(0) = (p_u + c * acoustic) / (2.0 * c2);
  e.left.row(1) = -p_u / c2;
  e.left(1, 0) += 1.0;
  e.left.row(2) << -ut, tx, ty, 0.0, 0.0;
  e.left.row(3) << -y, 0.0, 0.0, 0.0, 1.0;
  e.left.row(4) = (p_u - c * acoustic) / (2.0 * c2);
  return e;
}

double ReactiveEuler::max_speed(const State& u, Direction dir) const {
  const double un = (u(1) * dir.nx + u(2) * dir.ny) / u(0);
  return std::abs(un) + sound_speed(u);
}

State ReactiveEuler::source(const State& u) const {
  State s = State::Zero(5);
  if (u(4) == 0.0) return s;
  const double temp = temperature(u);
  s(4) = -params_.k_rate * u(4) * std::exp(-params_.t_act / temp);
  return s;
}

Matrix ReactiveEuler::source_jacobian(const State& u) const {
  Matrix j = Matrix::Zero(5, 5);
  const double temp = temperature(u);
  const double g = params_.gamma - 1.0;
  const double rho = u(0);
  const double vx = u(1) / rho;
  const double vy = u(2) / rho;
  const double k = 0.5 * (vx * vx + vy * vy);
  const double e = std::exp(-params_.t_act / temp);
  Eigen::Matrix<double, 1, 5> t_u;
  t_u << g * k - temp, -g * vx, -g * vy, g, -g * params_.q;
  t_u /= rho;
  j.row(4) = -params_.k_rate * e * u(4) * (params_.t_act / (temp * temp)) * t_u;
  j(4, 4) += -params_.k_rate * e;
  return j;
}

State ReactiveEuler::solve_implicit(const State& rhs, double coeff) const {
  if (coeff == 0.0 || rhs(4) == 0.0) return rhs;
  const double g = params_.gamma - 1.0;
  const double rho = rhs(0);
  const double base = rhs(3) - 0.5 * (rhs(1) * rhs(1) + rhs(2) * rhs(2)) / rho;
  const double r = rhs(4);
  const double kk = params_.k_rate;
  const double ta = params_.t_act;

  if (!(rho > 0.0) || !(base > 0.0)) throw_nonphysical("implicit source solve", rhs, rho, g * base);

  // residual f(z) = z - coeff * omega(z) - r on [lo, hi]; trial points with p <= 0 shrink hi
  auto evaluate = [&](double z, double& f, double& df) {
    const double p = g * (base - params_.q * z);
    if (!(p > 0.0)) return false;
    const double temp = p / rho;
    const double e = std::exp(-ta / temp);
    const double omega = -kk * z * e;
    const double domega = -kk * e * (1.0 - z * ta * g * params_.q / (temp * temp * rho));
    f = z - coeff * omega - r;
    df = 1.0 - coeff * domega;
    return true;
  };

  double lo = std::min(0.0, r);
  double hi = std::max(0.0, r);
  double z = r;
  const double tol = 1e-12 * std::max(1.0, std::abs(r));
  double f = 0.0;
  double df = 0.0;
  if (r > 0.0 && !(evaluate(r, f, df) && f >= 0.0)) {
    // r lies beyond p = 0: take the first sign change above zero
    const double top = std::min(r, base / params_.q);
    constexpr int kScan = 256;
    bool found = false;
    for (int k = 1; k <= kScan && !found; ++k) {
      const double zk = top * k / kScan * (1.0 - 1e-12);
      if (evaluate(zk, f, df) && f > 0.0) {
        lo = top * (k - 1) / kScan;
        hi = zk;
        found = true;
      }
    }
    if (!found) throw_nonphysical("implicit source solve", rhs, rho, g * (base - params_.q * r));
    z = 0.5 * (lo + hi);
  }
  for (int iter = 0; iter < kScalarNewtonMaxIterations; ++iter) {
    if (!evaluate(z, f, df)) {
      hi = z;
      z = 0.5 * (lo + hi);
      continue;
    }
    if (std::abs(f) <= tol) {
      State out = rhs;
      out(4) = z;
      return out;
    }
    if (f > 0.0) {
      hi = z;
    } else {
      lo = z;
    }
    double next = z - f / df;
    if (!(df > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) {
      State out = rhs;
      out(4) = next;
      if (!evaluate(next, f, df)) throw_nonphysical("implicit source solve", out, rho, g * (base - params_.q * next));
      return out;
    }
    z = next;
  }
  std::ostringstream msg;
  msg << "reaction source solve did not converge, rhs = " << rhs.transpose();
  throw Error(ErrorCode::NewtonDivergence, msg.str());
}

void ReactiveEuler::check_admissible(const State& u) const {
  const double p = pressure(u);
  if (!(u(0) > 0.0) || !(p > 0.0)) throw_nonphysical("nonphysical state", u, u(0), p);
}

State ReactiveEuler::rotate(const State& u, double cos_t, double sin_t) const {
  State r = u;
  r(1) = cos_t * u(1) + sin_t * u(2);
  r(2) = -sin_t * u(1) + cos_t * u(2);
  return r;
}

std::vector<std::string> ReactiveEuler::component_names() const {
  return {"rho", "rho_u", "rho_v", "E", "rho_Y"};
}

std::vector<std::string> ReactiveEuler::derived_names() const { return {"u", "v", "p", "Y", "T"}; }

std::vector<double> ReactiveEuler::derived(const State& u) const {
  const Primitive w = primitive(u);
  return {w.u, w.v, w.p, w.Y, w.p / w.rho};
}

std::shared_ptr<const ReactiveEuler> reactive_euler(EulerParameters params) {
  return std::make_shared<ReactiveEuler>(params);
}

}  // namespace imexilw
