#include <cmath>

#include "imexilw/error.hpp"
#include "imexilw/model.hpp"

namespace imexilw {

namespace {

State scalar(double v) {
  State s(1);
  s(0) = v;
  return s;
}

Matrix scalar_matrix(double v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

class BurgersSource final : public Model {
 public:
  std::string name() const override { return "burgers_source"; }
  int components() const override { return 1; }

  State flux(const State& u, Direction dir) const override { return scalar(dir.nx * 0.5 * u(0) * u(0)); }
  Matrix flux_jacobian(const State& u, Direction dir) const override { return scalar_matrix(dir.nx * u(0)); }
  Eigensystem eigensystem(const State& u, Direction dir) const override {
    return {scalar(dir.nx * u(0)), scalar_matrix(1.0), scalar_matrix(1.0)};
  }
  double max_speed(const State& u, Direction dir) const override { return std::abs(dir.nx * u(0)); }

  bool has_source() const override { return true; }
  State source(const State& u) const override { return scalar(u(0) * u(0) + u(0)); }
  Matrix source_jacobian(const State& u) const override { return scalar_matrix(2.0 * u(0) + 1.0); }

  std::vector<std::string> component_names() const override { return {"u"}; }
};

class ScalarLaw final : public Model {
 public:
  ScalarLaw(std::string name, std::function<double(double)> f, std::function<double(double)> df)
      : name_(std::move(name)), f_(std::move(f)), df_(std::move(df)) {}

  std::string name() const override { return name_; }
  int components() const override { return 1; }

  State flux(const State& u, Direction dir) const override { return scalar(dir.nx * f_(u(0))); }
  Matrix flux_jacobian(const State& u, Direction dir) const override {
    return scalar_matrix(dir.nx * df_(u(0)));
  }
  Eigensystem eigensystem(const State& u, Direction dir) const override {
    return {scalar(dir.nx * df_(u(0))), scalar_matrix(1.0), scalar_matrix(1.0)};
  }
  double max_speed(const State& u, Direction dir) const override { return std::abs(dir.nx * df_(u(0))); }

  std::vector<std::string> component_names() const override { return {"u"}; }

 private:
  std::string name_;
  std::function<double(double)> f_;
  std::function<double(double)> df_;
};

}  // namespace

ModelPtr scalar_burgers_source() { return std::make_shared<BurgersSource>(); }

ModelPtr scalar_law(std::string name, std::function<double(double)> f, std::function<double(double)> df) {
  return std::make_shared<ScalarLaw>(std::move(name), std::move(f), std::move(df));
}

ModelPtr linear_advection(double speed) {
  return scalar_law(
      "linear_advection", [speed](double u) { return speed * u; }, [speed](double) { return speed; });
}

}  // namespace imexilw
