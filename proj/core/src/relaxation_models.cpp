#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/model.hpp"

namespace imexilw {

namespace {

void require_positive_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    std::ostringstream msg;
    msg << "relaxation parameter must be positive, got " << epsilon;
    throw Error(ErrorCode::NonpositiveEpsilon, msg.str());
  }
}

State pair(double a, double b) {
  State s(2);
  s << a, b;
  return s;
}

class LinearRelaxation final : public Model {
 public:
  explicit LinearRelaxation(double epsilon) : epsilon_(epsilon) { require_positive_epsilon(epsilon); }

  std::string name() const override { return "linear_relax"; }
  int components() const override { return 2; }

  State flux(const State& u, Direction dir) const override { return dir.nx * pair(u(1), u(0)); }
  Matrix flux_jacobian(const State&, Direction dir) const override {
    Matrix a(2, 2);
    a << 0.0, dir.nx, dir.nx, 0.0;
    return a;
  }
  Eigensystem eigensystem(const State&, Direction dir) const override {
    const double r = 1.0 / std::sqrt(2.0);
    Eigensystem e;
    e.eigenvalues = pair(dir.nx, -dir.nx);
    e.left.resize(2, 2);
    e.left << r, r, r, -r;
    e.right = e.left;
    return e;
  }
  double max_speed(const State&, Direction dir) const override { return std::abs(dir.nx); }

  bool has_source() const override { return true; }
  State source(const State& u) const override { return pair(0.0, -(u(0) + u(1)) / epsilon_); }
  Matrix source_jacobian(const State&) const override {
    Matrix j(2, 2);
    j << 0.0, 0.0, -1.0 / epsilon_, -1.0 / epsilon_;
    return j;
  }
  State solve_implicit(const State& rhs, double coeff) const override {
    if (coeff == 0.0) return rhs;
    // Solve for s = u + v first so the relaxed combination carries no cancellation error.
    const double k = coeff / epsilon_;
    const double s = (rhs(0) + rhs(1)) / (1.0 + k);
    return pair(rhs(0), s - rhs(0));
  }

  std::vector<std::string> component_names() const override { return {"u", "v"}; }

 private:
  double epsilon_;
};

class NonlinearRelaxation final : public Model {
 public:
  explicit NonlinearRelaxation(double epsilon) : epsilon_(epsilon) { require_positive_epsilon(epsilon); }

  std::string name() const override { return "nonlinear_relax"; }
  int components() const override { return 2; }

  State flux(const State& u, Direction dir) const override {
    const double s = u(0) + u(1);
    return dir.nx * pair(u(1), u(0) + 0.5 * s * s);
  }
  Matrix flux_jacobian(const State& u, Direction dir) const override {
    const double s = u(0) + u(1);
    Matrix a(2, 2);
    a << 0.0, 1.0, 1.0 + s, s;
    return dir.nx * a;
  }
  Eigensystem eigensystem(const State& u, Direction dir) const override {
    check_admissible(u);
    const double s = u(0) + u(1);
    const double g = 1.0 + s;
    Eigensystem e;
    e.eigenvalues = dir.nx * pair(g, -1.0);
    e.left.resize(2, 2);
    e.left << 1.0, 1.0, 1.0, -1.0 / g;
    e.right.resize(2, 2);
    e.right << 1.0 / (2.0 + s), g / (2.0 + s), g / (2.0 + s), -g / (2.0 + s);
    return e;
  }
  double max_speed(const State& u, Direction dir) const override {
    return std::abs(dir.nx) * std::max(std::abs(1.0 + u(0) + u(1)), 1.0);
  }

  bool has_source() const override { return true; }
  State source(const State& u) const override {
    const double s = u(0) + u(1);
    return pair(0.0, -(s + s * s) / epsilon_);
  }
  Matrix source_jacobian(const State& u) const override {
    const double d = -(1.0 + 2.0 * (u(0) + u(1))) / epsilon_;
    Matrix j(2, 2);
    j << 0.0, 0.0, d, d;
    return j;
  }
  // u is unchanged and s = u + v solves k s^2 + (1 + k) s = r with k = coeff / epsilon;
  // the admissible root is written without cancellation.
  State solve_implicit(const State& rhs, double coeff) const override {
    const double k = coeff / epsilon_;
    const double r = rhs(0) + rhs(1);
    const double disc = (1.0 + k) * (1.0 + k) + 4.0 * k * r;
    if (!(disc >= 0.0)) {
      std::ostringstream msg;
      msg << "implicit relaxation solve has no real root for rhs = (" << rhs(0) << ", " << rhs(1) << ")";
      throw Error(ErrorCode::NewtonDivergence, msg.str());
    }
    const double s = 2.0 * r / ((1.0 + k) + std::sqrt(disc));
    return pair(rhs(0), s - rhs(0));
  }

  void check_admissible(const State& u) const override {
    if (!(1.0 + u(0) + u(1) > 0.0)) {
      std::ostringstream msg;
      msg << "1 + u + v must be positive, state = (" << u(0) << ", " << u(1) << ")";
      throw Error(ErrorCode::InadmissibleState, msg.str());
    }
  }

  std::vector<std::string> component_names() const override { return {"u", "v"}; }

 private:
  double epsilon_;
};

}  // namespace

ModelPtr linear_relaxation(double epsilon) { return std::make_shared<LinearRelaxation>(epsilon); }

ModelPtr nonlinear_relaxation(double epsilon) { return std::make_shared<NonlinearRelaxation>(epsilon); }

}  // namespace imexilw
