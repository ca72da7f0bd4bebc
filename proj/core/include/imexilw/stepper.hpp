#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "imexilw/boundary1d.hpp"
#include "imexilw/boundary2d.hpp"
#include "imexilw/discretization.hpp"
#include "imexilw/grid.hpp"
#include "imexilw/model.hpp"
#include "imexilw/tableau.hpp"

namespace imexilw {

struct SolverOptions {
  DiscretizationOptions discretization;
  ExtrapolationOptions extrapolation;
};

struct AdvanceResult {
  int steps = 0;
  double time = 0.0;
  bool reached_end = false;
};

// Solves U - coeff * Q(U) = rhs at one node.
State implicit_point_solve(const State& rhs, double a_ii, double dt, const Model& model);

double clip_to_end(double dt, double t, double t_end);

class Solver1D {
 public:
  Solver1D(ModelPtr model, const Grid1D& grid, IMEXTableau tableau, BoundaryRelation left,
           BoundaryRelation right, SolverOptions options = {});
  Solver1D(const Solver1D&) = delete;
  Solver1D& operator=(const Solver1D&) = delete;

  const Grid1D& grid() const { return grid_; }
  const Model& model() const { return *model_; }
  const IMEXTableau& tableau() const { return tableau_; }

  Field1D& solution() { return u_; }
  const Field1D& solution() const { return u_; }
  double time() const { return t_; }
  void set_time(double t) { t_ = t; }
  void set_initial(const std::function<State(double)>& u0, double t0 = 0.0);

  double compute_dt(double cfl) const;
  void step(double dt);
  // Fills ghost values of the current solution from the time-level boundary data.
  void fill_ghosts();
  AdvanceResult advance(double t_end, double cfl, int max_steps,
                        const std::function<void(int, double, double)>& on_step = {});

  const BoundarySide1D& left() const { return *left_; }
  const BoundarySide1D& right() const { return *right_; }
  const std::vector<Field1D>& stage_fields() const { return stages_; }

 private:
  void apply_periodic(Field1D& field) const;

  ModelPtr model_;
  Grid1D grid_;
  IMEXTableau tableau_;
  SolverOptions options_;
  std::unique_ptr<BoundarySide1D> left_;
  std::unique_ptr<BoundarySide1D> right_;
  bool periodic_ = false;
  Field1D u_;
  std::vector<Field1D> stages_;
  std::vector<Field1D> divergence_;
  std::vector<Field1D> sources_;
  double t_ = 0.0;
};

class Solver2D {
 public:
  Solver2D(ModelPtr model, const Grid2D& grid, IMEXTableau tableau, std::vector<FaceCondition> conditions,
           SolverOptions options = {});
  Solver2D(const Solver2D&) = delete;
  Solver2D& operator=(const Solver2D&) = delete;

  const Grid2D& grid() const { return grid_; }
  const Model& model() const { return *model_; }

  Field2D& solution() { return u_; }
  const Field2D& solution() const { return u_; }
  double time() const { return t_; }
  void set_time(double t) { t_ = t; }
  void set_initial(const std::function<State(double, double)>& u0, double t0 = 0.0);

  double compute_dt(double cfl) const;
  void step(double dt);
  void fill_ghosts();
  AdvanceResult advance(double t_end, double cfl, int max_steps,
                        const std::function<void(int, double, double)>& on_step = {});

  const BoundaryConditions2D& boundaries() const { return boundaries_; }

 private:
  ModelPtr model_;
  Grid2D grid_;
  IMEXTableau tableau_;
  SolverOptions options_;
  BoundaryConditions2D boundaries_;
  Field2D u_;
  std::vector<Field2D> stages_;
  std::vector<Field2D> divergence_;
  std::vector<Field2D> sources_;
  double t_ = 0.0;
};

}  // namespace imexilw
