#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "imexilw/types.hpp"

namespace imexilw {

inline constexpr int kGhostLayers = 2;

// Uniform 1D mesh with interior nodes x_0 .. x_{n-1} and two ghost nodes per side.
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n = 0;
  double dx = 0.0;
  double eta_left = 0.5;
  double eta_right = 0.5;

  double x(int j) const { return a + (eta_left + j) * dx; }
};

Grid1D build_grid_1d(double a, double b, int n, double eta_left, double eta_right);

// Values on a 1D mesh, indexed -2 .. n+1.
class Field1D {
 public:
  Field1D() = default;
  Field1D(int n, int m);

  int size() const { return n_; }
  int components() const { return m_; }

  State& operator[](int j) { return data_[static_cast<std::size_t>(j + kGhostLayers)]; }
  const State& operator[](int j) const { return data_[static_cast<std::size_t>(j + kGhostLayers)]; }

  void invalidate_ghosts();
  bool ghosts_valid() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<State> data_;
};

struct Rect {
  double x0 = 0.0;
  double x1 = 1.0;
  double y0 = 0.0;
  double y1 = 1.0;
};

enum class NodeType : std::uint8_t { Unused, Interior, Ghost };

enum class Edge { XLow, XHigh, YLow, YHigh };

struct NodeIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

// An axis-aligned boundary face seen from the fluid. owner < 0 is the domain rectangle,
// otherwise the obstacle index.
struct Face {
  int id = 0;
  int owner = -1;
  Edge edge = Edge::XLow;
  double theta = 0.0;
  double position = 0.0;
  bool normal_along_x = true;
  // outward unit normal in grid index steps
  int di = 0;
  int dj = 0;
};

struct GhostNode {
  NodeIndex node;
  double distance = 0.0;
};

// Grid line crossing a face at a foot point, with its ghost nodes and interior samples.
struct BoundaryLine {
  int face = 0;
  int tangential_index = 0;
  double foot_x = 0.0;
  double foot_y = 0.0;
  std::vector<NodeIndex> samples;  // interior nodes inward from the face, nearest first
  double first_offset = 0.0;       // distance from the face to samples[0]
  std::vector<GhostNode> ghosts;
};

struct GhostFoot {
  NodeIndex node;
  double foot_x = 0.0;
  double foot_y = 0.0;
  double theta = 0.0;
  double distance = 0.0;
};

class Grid2D {
 public:
  Rect domain;
  std::vector<Rect> obstacles;
  double dx = 0.0;
  double eta_x = 0.5;
  double eta_y = 0.5;
  int nx = 0;
  int ny = 0;

  double x(int i) const { return domain.x0 + (i + eta_x) * dx; }
  double y(int j) const { return domain.y0 + (j + eta_y) * dx; }

  bool in_range(int i, int j) const {
    return i >= -kGhostLayers && i < nx + kGhostLayers && j >= -kGhostLayers && j < ny + kGhostLayers;
  }
  NodeType type(int i, int j) const {
    return in_range(i, j) ? types_[index(i, j)] : NodeType::Unused;
  }
  bool is_fluid_point(double px, double py) const;

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + kGhostLayers) * static_cast<std::size_t>(nx + 2 * kGhostLayers) +
           static_cast<std::size_t>(i + kGhostLayers);
  }

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<BoundaryLine>& lines() const { return lines_; }
  const std::vector<NodeIndex>& interior_nodes() const { return interior_; }
  const std::vector<NodeIndex>& ghost_nodes() const { return ghosts_; }
  std::size_t interior_count() const { return interior_.size(); }

  // Face of the domain rectangle on the given edge, or -1.
  int domain_face(Edge edge) const;

 private:
  friend Grid2D build_grid_2d(const Rect&, const std::vector<Rect>&, double, double, double);

  std::vector<NodeType> types_;
  std::vector<Face> faces_;
  std::vector<BoundaryLine> lines_;
  std::vector<NodeIndex> interior_;
  std::vector<NodeIndex> ghosts_;
};

Grid2D build_grid_2d(const Rect& domain, const std::vector<Rect>& obstacles, double dx, double eta_x,
                     double eta_y);
Grid2D build_grid_2d(const Rect& domain, const std::vector<Rect>& obstacles, double dx, double eta);

std::vector<GhostFoot> ghosts_for_face(const Grid2D& grid, int face);

// Values on a 2D mesh, indexed -2 .. nx+1 by -2 .. ny+1.
class Field2D {
 public:
  Field2D() = default;
  Field2D(const Grid2D& grid, int m);

  int components() const { return m_; }

  State& operator()(int i, int j) { return data_[index(i, j)]; }
  const State& operator()(int i, int j) const { return data_[index(i, j)]; }
  State& operator()(NodeIndex p) { return data_[index(p.i, p.j)]; }
  const State& operator()(NodeIndex p) const { return data_[index(p.i, p.j)]; }

  void invalidate(const std::vector<NodeIndex>& nodes);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + kGhostLayers) * static_cast<std::size_t>(stride_) +
           static_cast<std::size_t>(i + kGhostLayers);
  }

  int stride_ = 0;
  int m_ = 0;
  std::vector<State> data_;
};

}  // namespace imexilw
