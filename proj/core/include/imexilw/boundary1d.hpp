#pragma once

#include <array>
#include <optional>
#include <vector>

#include "imexilw/extrapolation.hpp"
#include "imexilw/grid.hpp"
#include "imexilw/local_system.hpp"
#include "imexilw/relation.hpp"
#include "imexilw/tableau.hpp"

namespace imexilw {

// Eigen-decomposition at a boundary point in the local frame, sorted by
// ascending eigenvalue. Rows 0 .. incoming-1 take boundary relations.
struct CharacteristicSplit {
  State eigenvalues;
  Matrix left;
  Matrix right;
  int incoming = 0;
};

// Incoming count from eigenvalue signs; throws ZeroEigenvalue on |lambda| < 1e-10.
CharacteristicSplit characteristic_split(const LocalSystem& sys, const State& u0);
// Incoming count fixed by the number of boundary relations.
CharacteristicSplit characteristic_split(const LocalSystem& sys, const State& u0, int relation_count);

// Mixed system: relations B(U, t) = 0 and l_m U = V*_m for outgoing m.
State boundary_state_n(const LocalSystem& sys, const CharacteristicSplit& split, const State& v_star,
                       const BoundaryRelation& relation, double t, const State& guess);

// Normal derivative from B_U A U' = B_U (Q - T) + B_t and l_m U' = V*'_m for outgoing m.
// tangential is T, the tangential flux derivative at the boundary point (zero in 1D).
State boundary_first_derivative_ilw(const LocalSystem& sys, const CharacteristicSplit& split, const State& u0,
                                    const State& v_star_first, const BoundaryRelation& relation, double t,
                                    const State& tangential);

State boundary_second_derivative(const CharacteristicSplit& split, const State& v_star_second);

State taylor_ghost(const State& u0, const State& u1, const State& u2, double distance);

struct StageRecord {
  State value;
  State first;
  State flux_derivative;    // A(value) first + T
  State source;             // Q(value)
  State source_derivative;  // Q_U(value) first
  State flux_second;        // second normal flux derivative plus mixed tangential term
};

StageRecord make_stage_record(const LocalSystem& sys, const State& value, const State& first,
                              const State& tangential, const State& flux_second);

struct BoundaryStageCache {
  CharacteristicSplit split;
  State level_value;
  State level_first;
  State level_second;
  std::vector<StageRecord> stages;
};

std::array<State, 2> fill_ghosts_time_n(const BoundaryStageCache& cache, const std::array<double, 2>& distances);

State stage_boundary_value(const BoundaryStageCache& cache, const IMEXTableau& tableau, int stage,
                           const LocalSystem& sys, double dt);

State stage_boundary_derivative(const BoundaryStageCache& cache, const IMEXTableau& tableau, int stage,
                                const LocalSystem& sys, double dt, const State& value);

std::array<State, 2> stage_fill_ghosts(const State& value, const State& first, const State& second,
                                       const std::array<double, 2>& distances);

// Boundary treatment at one boundary point along a normal grid line.
class BoundaryPoint {
 public:
  BoundaryPoint(const LocalSystem& sys, const BoundaryRelation& relation, ExtrapolationStencil stencil,
                ExtrapolationOptions extrapolation = {}, bool tangential = false);

  // Time level n. Samples are local-frame states nearest first.
  void begin_level(const std::array<State, 3>& samples);
  void solve_level(double t_n, const State& tangential);

  // Stage i (0-based) after the interior stage values are known.
  void begin_stage(int stage, const std::array<State, 3>& samples);
  void solve_stage(int stage, const IMEXTableau& tableau, double dt, const State& tangential,
                   const State& mixed);

  // Extrapolated tangential flux and its normal derivative from the last samples.
  const State& tangential_trace(int k) const { return tangential_trace_[static_cast<std::size_t>(k)]; }

  State ghost(double distance) const;
  const State& value() const { return current_[0]; }
  const State& first() const { return current_[1]; }
  const State& second() const { return current_[2]; }

  const BoundaryStageCache& cache() const { return cache_; }
  const LocalSystem& system() const { return *sys_; }
  const ExtrapolationStencil& stencil() const { return stencil_; }

 private:
  void extrapolate_tangential(const std::array<State, 3>& samples);
  State characteristic_second(const std::array<State, 3>& samples) const;

  const LocalSystem* sys_;
  const BoundaryRelation* relation_;
  ExtrapolationStencil stencil_;
  ExtrapolationOptions extrapolation_;
  bool tangential_;
  BoundaryStageCache cache_;
  State v_star_value_;
  State v_star_first_;
  State guess_;
  State stage_second_;
  State stage_flux_second_;
  std::array<State, 2> tangential_trace_;
  std::array<State, 3> current_;
};

enum class Side { Left, Right };

// One end of a 1D domain.
class BoundarySide1D {
 public:
  BoundarySide1D(const Model& model, const Grid1D& grid, Side side, BoundaryRelation relation,
                 ExtrapolationOptions extrapolation = {});
  BoundarySide1D(const BoundarySide1D&) = delete;
  BoundarySide1D& operator=(const BoundarySide1D&) = delete;

  Side side() const { return side_; }
  BoundaryKind kind() const { return relation_.kind; }

  void begin_step(const Field1D& un, double t_n);
  void fill_level(Field1D& un) const;
  void complete_stage(int stage, Field1D& field, const IMEXTableau& tableau, double dt);

  const BoundaryPoint& point() const { return *point_; }
  const LocalSystem& system() const { return sys_; }
  std::array<double, 2> ghost_distances() const { return distances_; }

 private:
  std::array<State, 3> samples(const Field1D& field) const;
  void write_ghosts(Field1D& field, const BoundaryPoint& p) const;
  void copy_outflow(Field1D& field) const;

  const Grid1D* grid_;
  Side side_;
  BoundaryRelation relation_;
  LocalSystem sys_;
  std::array<double, 2> distances_{};
  std::optional<BoundaryPoint> point_;
};

}  // namespace imexilw
