#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/grid.hpp"

namespace imexilw {

namespace {

constexpr double kGeometryTolerance = 1e-9;

int cell_count(double length, double dx, const char* axis) {
  const double ratio = length / dx;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > kGeometryTolerance * std::max(1.0, ratio)) {
    std::ostringstream msg;
    msg << "domain length along " << axis << " is not a multiple of the spacing";
    throw Error(ErrorCode::InvalidSpacing, msg.str());
  }
  return static_cast<int>(rounded);
}

bool overlaps(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

bool inside_closed(const Rect& r, double x, double y) {
  return x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1;
}

double face_theta(bool domain, Edge edge) {
  const double pi = std::numbers::pi;
  switch (edge) {
    case Edge::XLow: return domain ? pi : 0.0;
    case Edge::XHigh: return domain ? 0.0 : pi;
    case Edge::YLow: return domain ? -pi / 2 : pi / 2;
    case Edge::YHigh: return domain ? pi / 2 : -pi / 2;
  }
  return 0.0;
}

struct Candidate {
  int face_key = -1;
  double distance = std::numeric_limits<double>::infinity();
  bool along_x = false;
};

// Face key encodes owner and edge: (owner + 1) * 4 + edge.
int face_key(int owner, Edge edge) { return (owner + 1) * 4 + static_cast<int>(edge); }

}  // namespace

bool Grid2D::is_fluid_point(double px, double py) const {
  if (!(px > domain.x0 && px < domain.x1 && py > domain.y0 && py < domain.y1)) return false;
  for (const auto& r : obstacles) {
    if (inside_closed(r, px, py)) return false;
  }
  return true;
}

int Grid2D::domain_face(Edge edge) const {
  for (const auto& f : faces_) {
    if (f.owner < 0 && f.edge == edge) return f.id;
  }
  return -1;
}

Grid2D build_grid_2d(const Rect& domain, const std::vector<Rect>& obstacles, double dx, double eta) {
  return build_grid_2d(domain, obstacles, dx, eta, eta);
}

Grid2D build_grid_2d(const Rect& domain, const std::vector<Rect>& obstacles, double dx, double eta_x,
                     double eta_y) {
  if (!(domain.x1 > domain.x0) || !(domain.y1 > domain.y0)) {
    throw Error(ErrorCode::ConfigError, "domain rectangle is empty");
  }
  if (!(dx > 0.0)) throw Error(ErrorCode::InvalidSpacing, "grid spacing must be positive");
  if (!(eta_x > 0.0 && eta_x < 1.0) || !(eta_y > 0.0 && eta_y < 1.0)) {
    throw Error(ErrorCode::InvalidEta, "boundary offsets must lie in (0, 1)");
  }
  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    const Rect& r = obstacles[k];
    if (!(r.x1 > r.x0) || !(r.y1 > r.y0)) throw Error(ErrorCode::ConfigError, "obstacle rectangle is empty");
    if (r.x0 < domain.x0 || r.x1 > domain.x1 || r.y0 < domain.y0 || r.y1 > domain.y1) {
      std::ostringstream msg;
      msg << "obstacle " << k << " is not contained in the domain";
      throw Error(ErrorCode::ObstacleOutsideDomain, msg.str());
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (overlaps(r, obstacles[l])) {
        std::ostringstream msg;
        msg << "obstacles " << l << " and " << k << " overlap";
        throw Error(ErrorCode::GeometryOverlap, msg.str());
      }
    }
  }

  Grid2D g;
  g.domain = domain;
  g.obstacles = obstacles;
  g.dx = dx;
  g.eta_x = eta_x;
  g.eta_y = eta_y;
  g.nx = cell_count(domain.x1 - domain.x0, dx, "x");
  g.ny = cell_count(domain.y1 - domain.y0, dx, "y");

  for (const auto& r : obstacles) {
    for (double e : {r.x0, r.x1}) {
      const double s = (e - domain.x0) / dx - eta_x;
      if (std::abs(s - std::round(s)) < kGeometryTolerance) {
        throw Error(ErrorCode::InvalidSpacing, "obstacle edge falls on a grid line");
      }
    }
    for (double e : {r.y0, r.y1}) {
      const double s = (e - domain.y0) / dx - eta_y;
      if (std::abs(s - std::round(s)) < kGeometryTolerance) {
        throw Error(ErrorCode::InvalidSpacing, "obstacle edge falls on a grid line");
      }
    }
  }

  const int width = g.nx + 2 * kGhostLayers;
  const int height = g.ny + 2 * kGhostLayers;
  g.types_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), NodeType::Unused);

  for (int j = -kGhostLayers; j < g.ny + kGhostLayers; ++j) {
    for (int i = -kGhostLayers; i < g.nx + kGhostLayers; ++i) {
      if (g.is_fluid_point(g.x(i), g.y(j))) {
        g.types_[g.index(i, j)] = NodeType::Interior;
        g.interior_.push_back({i, j});
      }
    }
  }
  if (g.interior_.empty()) throw Error(ErrorCode::ConfigError, "geometry has no interior nodes");

  auto fluid = [&g](int i, int j) { return g.type(i, j) == NodeType::Interior; };

  // Locate the face crossed between fluid node p and non-fluid node q = p + d.
  auto crossed_face = [&](int pi, int pj, int di, int dj, double& position, int& owner, Edge& edge) {
    const int qi = pi + di;
    const int qj = pj + dj;
    const double qx = g.x(qi);
    const double qy = g.y(qj);
    if (di > 0 && qx >= domain.x1) {
      owner = -1, edge = Edge::XHigh, position = domain.x1;
      return;
    }
    if (di < 0 && qx <= domain.x0) {
      owner = -1, edge = Edge::XLow, position = domain.x0;
      return;
    }
    if (dj > 0 && qy >= domain.y1) {
      owner = -1, edge = Edge::YHigh, position = domain.y1;
      return;
    }
    if (dj < 0 && qy <= domain.y0) {
      owner = -1, edge = Edge::YLow, position = domain.y0;
      return;
    }
    for (std::size_t k = 0; k < obstacles.size(); ++k) {
      const Rect& r = obstacles[k];
      if (!inside_closed(r, qx, qy)) continue;
      owner = static_cast<int>(k);
      if (di > 0) edge = Edge::XLow, position = r.x0;
      if (di < 0) edge = Edge::XHigh, position = r.x1;
      if (dj > 0) edge = Edge::YLow, position = r.y0;
      if (dj < 0) edge = Edge::YHigh, position = r.y1;
      return;
    }
    throw Error(ErrorCode::ConfigError, "could not locate boundary face");
  };

  std::map<std::size_t, Candidate> candidates;
  std::map<int, std::pair<int, Edge>> face_info;
  std::map<int, double> face_position;
  const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const auto& p : g.interior_) {
    for (const auto& d : dirs) {
      int k = 1;
      while (k <= kGhostLayers && fluid(p.i + k * d[0], p.j + k * d[1])) ++k;
      if (k > kGhostLayers) continue;
      const int li = p.i + (k - 1) * d[0];
      const int lj = p.j + (k - 1) * d[1];
      double position = 0.0;
      int owner = -1;
      Edge edge = Edge::XLow;
      crossed_face(li, lj, d[0], d[1], position, owner, edge);
      const int key = face_key(owner, edge);
      face_info[key] = {owner, edge};
      face_position[key] = position;
      for (int s = k; s <= kGhostLayers; ++s) {
        const int gi = p.i + s * d[0];
        const int gj = p.j + s * d[1];
        if (fluid(gi, gj) || !g.in_range(gi, gj)) break;
        const bool along_x = d[0] != 0;
        const double distance = along_x ? std::abs(g.x(gi) - position) : std::abs(g.y(gj) - position);
        Candidate& c = candidates[g.index(gi, gj)];
        const bool better = distance < c.distance - kGeometryTolerance * dx ||
                            (std::abs(distance - c.distance) <= kGeometryTolerance * dx && along_x && !c.along_x);
        if (better) c = Candidate{key, distance, along_x};
      }
    }
  }

  std::map<int, int> face_ids;
  for (const auto& [key, info] : face_info) {
    Face f;
    f.id = static_cast<int>(g.faces_.size());
    f.owner = info.first;
    f.edge = info.second;
    f.theta = face_theta(info.first < 0, info.second);
    f.position = face_position[key];
    f.normal_along_x = info.second == Edge::XLow || info.second == Edge::XHigh;
    const bool domain_face = info.first < 0;
    switch (info.second) {
      case Edge::XLow: f.di = domain_face ? -1 : 1; break;
      case Edge::XHigh: f.di = domain_face ? 1 : -1; break;
      case Edge::YLow: f.dj = domain_face ? -1 : 1; break;
      case Edge::YHigh: f.dj = domain_face ? 1 : -1; break;
    }
    face_ids[key] = f.id;
    g.faces_.push_back(f);
  }

  std::map<std::pair<int, int>, std::size_t> line_lookup;
  for (int j = -kGhostLayers; j < g.ny + kGhostLayers; ++j) {
    for (int i = -kGhostLayers; i < g.nx + kGhostLayers; ++i) {
      auto it = candidates.find(g.index(i, j));
      if (it == candidates.end()) continue;
      g.types_[g.index(i, j)] = NodeType::Ghost;
      g.ghosts_.push_back({i, j});
      const Face& f = g.faces_[static_cast<std::size_t>(face_ids[it->second.face_key])];
      const int tangential = f.normal_along_x ? j : i;
      auto [lit, inserted] = line_lookup.try_emplace({f.id, tangential}, g.lines_.size());
      if (inserted) {
        BoundaryLine line;
        line.face = f.id;
        line.tangential_index = tangential;
        line.foot_x = f.normal_along_x ? f.position : g.x(i);
        line.foot_y = f.normal_along_x ? g.y(j) : f.position;
        g.lines_.push_back(line);
      }
      g.lines_[lit->second].ghosts.push_back({{i, j}, it->second.distance});
    }
  }

  for (auto& line : g.lines_) {
    const Face& f = g.faces_[static_cast<std::size_t>(line.face)];
    std::sort(line.ghosts.begin(), line.ghosts.end(),
              [](const GhostNode& a, const GhostNode& b) { return a.distance < b.distance; });
    NodeIndex p = line.ghosts.front().node;
    int steps = 0;
    while (!fluid(p.i, p.j) && steps <= kGhostLayers + 1) {
      p = {p.i - f.di, p.j - f.dj};
      ++steps;
    }
    while (fluid(p.i, p.j) && line.samples.size() < 3) {
      line.samples.push_back(p);
      p = {p.i - f.di, p.j - f.dj};
    }
    if (!line.samples.empty()) {
      const NodeIndex s0 = line.samples.front();
      line.first_offset =
          f.normal_along_x ? std::abs(g.x(s0.i) - f.position) : std::abs(g.y(s0.j) - f.position);
    }
  }
  std::stable_sort(g.lines_.begin(), g.lines_.end(), [](const BoundaryLine& a, const BoundaryLine& b) {
    return a.face != b.face ? a.face < b.face : a.tangential_index < b.tangential_index;
  });
  return g;
}

std::vector<GhostFoot> ghosts_for_face(const Grid2D& grid, int face) {
  std::vector<GhostFoot> out;
  const Face& f = grid.faces().at(static_cast<std::size_t>(face));
  for (const auto& line : grid.lines()) {
    if (line.face != face) continue;
    for (const auto& gn : line.ghosts) {
      out.push_back({gn.node, line.foot_x, line.foot_y, f.theta, gn.distance});
    }
  }
  return out;
}

Field2D::Field2D(const Grid2D& grid, int m)
    : stride_(grid.nx + 2 * kGhostLayers),
      m_(m),
      data_(static_cast<std::size_t>(grid.nx + 2 * kGhostLayers) * static_cast<std::size_t>(grid.ny + 2 * kGhostLayers),
            State::Zero(m)) {
  invalidate(grid.ghost_nodes());
}

void Field2D::invalidate(const std::vector<NodeIndex>& nodes) {
  const State nan = State::Constant(m_, std::numeric_limits<double>::quiet_NaN());
  for (const auto& p : nodes) (*this)(p) = nan;
}

}  // namespace imexilw
