#pragma once

#include <memory>
#include <vector>

#include "imexilw/boundary1d.hpp"
#include "imexilw/grid.hpp"
#include "imexilw/local_system.hpp"
#include "imexilw/model.hpp"
#include "imexilw/relation.hpp"

namespace imexilw {

struct FaceCondition {
  BoundaryKind kind = BoundaryKind::OutflowCopy;
  BoundaryRelation relation;  // local frame, for characteristic faces
  State inflow;               // global state, for prescribed-state faces
};

FaceCondition wall_condition(int m);
FaceCondition inflow_state_condition(const State& u_in);
FaceCondition outflow_copy_condition();
FaceCondition periodic_condition();
FaceCondition characteristic_condition(BoundaryRelation relation);

// Samples along the inward normal through a boundary line, nearest first.
std::array<State, 3> normal_line_samples(const Grid2D& grid, const BoundaryLine& line, const Field2D& field);

// Derivative of order k along a face of per-line values. indices are the tangential grid
// indices of the lines (increasing), values the quantities at their foot points; sign is
// the orientation of the face tangent relative to the grid axis.
State tangential_derivative(const std::vector<State>& values, const std::vector<int>& indices, std::size_t at,
                            double spacing, double sign, int k);

void outflow_copy(const Grid2D& grid, int face, Field2D& field);

class FaceBoundary {
 public:
  FaceBoundary(const Model& model, const Grid2D& grid, int face, FaceCondition condition,
               ExtrapolationOptions extrapolation = {});
  FaceBoundary(const FaceBoundary&) = delete;
  FaceBoundary& operator=(const FaceBoundary&) = delete;

  int face() const { return face_; }
  BoundaryKind kind() const { return condition_.kind; }
  const LocalSystem& system() const { return sys_; }
  std::size_t line_count() const { return lines_.size(); }
  const BoundaryLine& line(std::size_t k) const { return *lines_[k]; }
  const BoundaryPoint& point(std::size_t k) const { return points_[k]; }

  void begin_step(const Field2D& u, double t_n);
  void fill_level(Field2D& u) const;
  void complete_stage(int stage, Field2D& field, const IMEXTableau& tableau, double dt);

 private:
  std::array<State, 3> local_samples(const Field2D& field, std::size_t k) const;
  void tangential_terms(int order_source, std::vector<State>& out) const;
  void write_ghosts(Field2D& field) const;

  const Grid2D* grid_;
  int face_;
  FaceCondition condition_;
  LocalSystem sys_;
  double sign_ = 1.0;
  std::vector<const BoundaryLine*> lines_;
  std::vector<int> indices_;
  std::vector<BoundaryPoint> points_;
};

class BoundaryConditions2D {
 public:
  BoundaryConditions2D() = default;
  BoundaryConditions2D(const Model& model, const Grid2D& grid, std::vector<FaceCondition> conditions,
                       ExtrapolationOptions extrapolation = {});

  void begin_step(const Field2D& u, double t_n);
  void fill_level(Field2D& u) const;
  void complete_stage(int stage, Field2D& field, const IMEXTableau& tableau, double dt);

  const std::vector<std::unique_ptr<FaceBoundary>>& faces() const { return faces_; }

 private:
  void apply_periodic(Field2D& field) const;

  const Grid2D* grid_ = nullptr;
  std::vector<std::unique_ptr<FaceBoundary>> faces_;
  std::vector<NodeIndex> periodic_ghosts_;
};

}  // namespace imexilw
