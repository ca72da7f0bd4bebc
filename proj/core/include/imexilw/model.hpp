#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "imexilw/types.hpp"

namespace imexilw {

struct Eigensystem {
  State eigenvalues;
  Matrix left;   // rows are left eigenvectors
  Matrix right;  // columns are right eigenvectors, left * right = I
};

// Hyperbolic balance law U_t + F(U)_x + G(U)_y = Q(U). Directional quantities
// refer to the flux n_x F + n_y G.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual int components() const = 0;
  virtual int dimensions() const { return 1; }

  virtual State flux(const State& u, Direction dir) const = 0;
  virtual Matrix flux_jacobian(const State& u, Direction dir) const;
  virtual Eigensystem eigensystem(const State& u, Direction dir) const = 0;
  virtual double max_speed(const State& u, Direction dir) const;

  virtual bool has_source() const { return false; }
  virtual State source(const State& u) const;
  virtual Matrix source_jacobian(const State& u) const;

  // Solves U - coeff * Q(U) = rhs.
  virtual State solve_implicit(const State& rhs, double coeff) const;

  // Throws when the state is outside the admissible set.
  virtual void check_admissible(const State& u) const;

  // Rotates vector-valued components by T = [[c, s], [-s, c]].
  virtual State rotate(const State& u, double cos_t, double sin_t) const;

  virtual std::vector<std::string> component_names() const;
  virtual std::vector<std::string> derived_names() const { return {}; }
  virtual std::vector<double> derived(const State& u) const;
  virtual Splitting preferred_splitting() const { return Splitting::Componentwise; }
};

using ModelPtr = std::shared_ptr<const Model>;

Matrix finite_difference_jacobian(const std::function<State(const State&)>& f, const State& u,
                                  double relative_step = 1e-7);

// Newton iteration for U - coeff * Q(U) = rhs with Jacobian I - coeff * Q_U.
State newton_implicit_solve(const Model& model, const State& rhs, double coeff);

ModelPtr scalar_burgers_source();
ModelPtr linear_relaxation(double epsilon);
ModelPtr nonlinear_relaxation(double epsilon);

// Source-free scalar law with user supplied flux and derivative.
ModelPtr scalar_law(std::string name, std::function<double(double)> f,
                    std::function<double(double)> df);
ModelPtr linear_advection(double speed = 1.0);

struct EulerParameters {
  double gamma = 1.2;
  double q = 50.0;
  double t_act = 50.0;
  double k_rate = 2566.4;
};

struct Primitive {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
  double Y = 0.0;
};

class ReactiveEuler final : public Model {
 public:
  explicit ReactiveEuler(EulerParameters params);

  const EulerParameters& parameters() const { return params_; }

  std::string name() const override { return "reactive_euler"; }
  int components() const override { return 5; }
  int dimensions() const override { return 2; }

  State flux(const State& u, Direction dir) const override;
  Matrix flux_jacobian(const State& u, Direction dir) const override;
  Eigensystem eigensystem(const State& u, Direction dir) const override;
  double max_speed(const State& u, Direction dir) const override;

  bool has_source() const override { return true; }
  State source(const State& u) const override;
  Matrix source_jacobian(const State& u) const override;
  State solve_implicit(const State& rhs, double coeff) const override;

  void check_admissible(const State& u) const override;
  State rotate(const State& u, double cos_t, double sin_t) const override;

  std::vector<std::string> component_names() const override;
  std::vector<std::string> derived_names() const override;
  std::vector<double> derived(const State& u) const override;
  Splitting preferred_splitting() const override { return Splitting::Characteristic; }

  double pressure(const State& u) const;
  double temperature(const State& u) const;
  double sound_speed(const State& u) const;
  double total_energy(const Primitive& w) const;
  State conserved(const Primitive& w) const;
  Primitive primitive(const State& u) const;

 private:
  EulerParameters params_;
};

std::shared_ptr<const ReactiveEuler> reactive_euler(EulerParameters params = {});

}  // namespace imexilw
