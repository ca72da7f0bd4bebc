#include "imexilw/boundary2d.hpp"

#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

void missing_stencil(const BoundaryLine& line) {
  std::ostringstream msg;
  msg << "fewer than 3 interior nodes along the normal through (" << line.foot_x << ", " << line.foot_y << ")";
  throw Error(ErrorCode::MissingStencil, msg.str());
}

}  // namespace

FaceCondition wall_condition(int m) {
  FaceCondition c;
  c.kind = BoundaryKind::Characteristic;
  c.relation = wall_relation(m);
  return c;
}

FaceCondition inflow_state_condition(const State& u_in) {
  FaceCondition c;
  c.kind = BoundaryKind::PrescribedState;
  c.inflow = u_in;
  return c;
}

FaceCondition outflow_copy_condition() {
  FaceCondition c;
  c.kind = BoundaryKind::OutflowCopy;
  c.relation = outflow_copy_relation();
  return c;
}

FaceCondition periodic_condition() {
  FaceCondition c;
  c.kind = BoundaryKind::Periodic;
  c.relation = periodic_relation();
  return c;
}

FaceCondition characteristic_condition(BoundaryRelation relation) {
  FaceCondition c;
  c.kind = BoundaryKind::Characteristic;
  c.relation = std::move(relation);
  return c;
}

std::array<State, 3> normal_line_samples(const Grid2D& grid, const BoundaryLine& line, const Field2D& field) {
  (void)grid;
  if (line.samples.size() < 3) missing_stencil(line);
  return {field(line.samples[0]), field(line.samples[1]), field(line.samples[2])};
}

State tangential_derivative(const std::vector<State>& values, const std::vector<int>& indices, std::size_t at,
                            double spacing, double sign, int k) {
  const int here = indices[at];
  auto has = [&](int offset) {
    const long pos = static_cast<long>(at) + offset;
    return pos >= 0 && pos < static_cast<long>(indices.size()) &&
           indices[static_cast<std::size_t>(pos)] == here + offset;
  };
  auto f = [&](int offset) -> const State& { return values[static_cast<std::size_t>(static_cast<long>(at) + offset)]; };
  const double scale = k == 1 ? sign : 1.0;
  if (k == 1) {
    if (has(-1) && has(1)) return scale * (f(1) - f(-1)) / (2.0 * spacing);
    if (has(1) && has(2)) return scale * (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * spacing);
    if (has(-1) && has(-2)) return scale * (3.0 * f(0) - 4.0 * f(-1) + f(-2)) / (2.0 * spacing);
    if (has(1)) return scale * (f(1) - f(0)) / spacing;
    if (has(-1)) return scale * (f(0) - f(-1)) / spacing;
  } else if (k == 2) {
    const double h2 = spacing * spacing;
    if (has(-1) && has(1)) return (f(1) - 2.0 * f(0) + f(-1)) / h2;
    if (has(1) && has(2)) return (f(0) - 2.0 * f(1) + f(2)) / h2;
    if (has(-1) && has(-2)) return (f(0) - 2.0 * f(-1) + f(-2)) / h2;
  } else {
    throw Error(ErrorCode::ConfigError, "tangential derivative order must be 1 or 2");
  }
  throw Error(ErrorCode::MissingStencil, "too few boundary lines along the face for a tangential derivative");
}

void outflow_copy(const Grid2D& grid, int face, Field2D& field) {
  for (const auto& line : grid.lines()) {
    if (line.face != face) continue;
    for (const auto& g : line.ghosts) {
      const int layer = static_cast<int>(std::lround((g.distance + line.first_offset) / grid.dx));
      if (layer < 1 || layer > static_cast<int>(line.samples.size())) missing_stencil(line);
      field(g.node) = field(line.samples[static_cast<std::size_t>(layer - 1)]);
    }
  }
}

FaceBoundary::FaceBoundary(const Model& model, const Grid2D& grid, int face, FaceCondition condition,
                           ExtrapolationOptions extrapolation)
    : grid_(&grid),
      face_(face),
      condition_(std::move(condition)),
      sys_(model, make_frame(grid.faces().at(static_cast<std::size_t>(face)).theta)) {
  const Face& f = grid.faces()[static_cast<std::size_t>(face)];
  sign_ = f.normal_along_x ? sys_.frame().cos_t : -sys_.frame().sin_t;
  for (const auto& line : grid.lines()) {
    if (line.face != face) continue;
    lines_.push_back(&line);
    indices_.push_back(line.tangential_index);
  }
  if (condition_.kind == BoundaryKind::PrescribedState) {
    condition_.relation = prescribed_state_relation(sys_.to_local(condition_.inflow));
  }
  if (!condition_.relation.uses_ghost_solver()) return;
  points_.reserve(lines_.size());
  for (const BoundaryLine* line : lines_) {
    if (line->samples.size() < 3) missing_stencil(*line);
    points_.emplace_back(sys_, condition_.relation, ExtrapolationStencil{-line->first_offset, -grid.dx, 0.0},
                         extrapolation, true);
  }
}

std::array<State, 3> FaceBoundary::local_samples(const Field2D& field, std::size_t k) const {
  std::array<State, 3> s = normal_line_samples(*grid_, *lines_[k], field);
  for (auto& v : s) v = sys_.to_local(v);
  return s;
}

void FaceBoundary::tangential_terms(int order_source, std::vector<State>& out) const {
  std::vector<State> traces(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) traces[k] = points_[k].tangential_trace(order_source);
  out.resize(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    out[k] = tangential_derivative(traces, indices_, k, grid_->dx, sign_, 1);
  }
}

void FaceBoundary::write_ghosts(Field2D& field) const {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    for (const auto& g : lines_[k]->ghosts) field(g.node) = sys_.to_global(points_[k].ghost(g.distance));
  }
}

void FaceBoundary::begin_step(const Field2D& u, double t_n) {
  if (points_.empty()) return;
  for (std::size_t k = 0; k < points_.size(); ++k) points_[k].begin_level(local_samples(u, k));
  std::vector<State> tangential;
  tangential_terms(0, tangential);
  for (std::size_t k = 0; k < points_.size(); ++k) points_[k].solve_level(t_n, tangential[k]);
}

void FaceBoundary::fill_level(Field2D& u) const {
  if (condition_.kind == BoundaryKind::OutflowCopy) {
    outflow_copy(*grid_, face_, u);
  } else {
    write_ghosts(u);
  }
}

void FaceBoundary::complete_stage(int stage, Field2D& field, const IMEXTableau& tableau, double dt) {
  if (condition_.kind == BoundaryKind::OutflowCopy) {
    outflow_copy(*grid_, face_, field);
    return;
  }
  if (points_.empty()) return;
  for (std::size_t k = 0; k < points_.size(); ++k) points_[k].begin_stage(stage, local_samples(field, k));
  std::vector<State> tangential;
  std::vector<State> mixed;
  tangential_terms(0, tangential);
  tangential_terms(1, mixed);
  for (std::size_t k = 0; k < points_.size(); ++k) {
    points_[k].solve_stage(stage, tableau, dt, tangential[k], mixed[k]);
  }
  write_ghosts(field);
}

BoundaryConditions2D::BoundaryConditions2D(const Model& model, const Grid2D& grid,
                                           std::vector<FaceCondition> conditions, ExtrapolationOptions extrapolation)
    : grid_(&grid) {
  if (conditions.size() != grid.faces().size()) {
    throw Error(ErrorCode::ConfigError, "one boundary condition per face is required");
  }
  bool periodic_x[2] = {false, false};
  bool periodic_y[2] = {false, false};
  for (const Face& f : grid.faces()) {
    FaceCondition& c = conditions[static_cast<std::size_t>(f.id)];
    if (c.kind == BoundaryKind::Periodic) {
      if (f.owner >= 0) throw Error(ErrorCode::ConfigError, "obstacle faces cannot be periodic");
      if (f.edge == Edge::XLow) periodic_x[0] = true;
      if (f.edge == Edge::XHigh) periodic_x[1] = true;
      if (f.edge == Edge::YLow) periodic_y[0] = true;
      if (f.edge == Edge::YHigh) periodic_y[1] = true;
      for (const auto& line : grid.lines()) {
        if (line.face != f.id) continue;
        for (const auto& g : line.ghosts) periodic_ghosts_.push_back(g.node);
      }
      continue;
    }
    faces_.push_back(std::make_unique<FaceBoundary>(model, grid, f.id, std::move(c), extrapolation));
  }
  if (periodic_x[0] != periodic_x[1] || periodic_y[0] != periodic_y[1]) {
    throw Error(ErrorCode::ConfigError, "periodic sides must come in opposite pairs");
  }
}

void BoundaryConditions2D::apply_periodic(Field2D& field) const {
  const int nx = grid_->nx;
  const int ny = grid_->ny;
  for (const auto& p : periodic_ghosts_) {
    NodeIndex src = p;
    if (src.i < 0) src.i += nx;
    if (src.i >= nx) src.i -= nx;
    if (src.j < 0) src.j += ny;
    if (src.j >= ny) src.j -= ny;
    if (grid_->type(src.i, src.j) != NodeType::Interior) {
      throw Error(ErrorCode::MissingGhostData, "periodic image of a ghost node is not an interior node");
    }
    field(p) = field(src);
  }
}

void BoundaryConditions2D::begin_step(const Field2D& u, double t_n) {
  for (auto& f : faces_) f->begin_step(u, t_n);
}

void BoundaryConditions2D::fill_level(Field2D& u) const {
  for (const auto& f : faces_) f->fill_level(u);
  apply_periodic(u);
}

void BoundaryConditions2D::complete_stage(int stage, Field2D& field, const IMEXTableau& tableau, double dt) {
  for (auto& f : faces_) f->complete_stage(stage, field, tableau, dt);
  apply_periodic(field);
}

}  // namespace imexilw
