#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qcurl/common.hpp"

namespace qcurl {

/// Lattice coordinates of a cell, vertex, or (together with an axis) an edge or face.
using Lattice = std::array<int, 3>;

/// Uniform n x n x n partition of the unit cube.
///
/// Entities are numbered lexicographically (x fastest). Edges and faces are
/// axis-major: all x-directed edges first, then y, then z; faces are grouped by
/// the axis of their normal. Edge tangents and face normals always point along
/// the positive coordinate axis, and the two face tangents are the remaining
/// axes in ascending order.
///
/// Within a cell the local numbering is
///   edge   4*a + b0 + 2*b1   (a = edge axis, b0/b1 = offsets along the other axes)
///   face   2*a + s           (a = normal axis, s = 0 lower / 1 upper)
///   vertex i + 2*j + 4*k
class BrickMesh {
 public:
  explicit BrickMesh(int n);

  int n() const { return n_; }
  const Vec3& h_axis() const { return h_axis_; }
  double h() const { return h_axis_[0]; }
  double h_diag() const { return h_diag_; }

  int num_cells() const { return n_ * n_ * n_; }
  int num_vertices() const { return (n_ + 1) * (n_ + 1) * (n_ + 1); }
  int num_edges() const { return 3 * num_edges_per_axis(); }
  int num_faces() const { return 3 * num_faces_per_axis(); }
  int num_edges_per_axis() const { return n_ * (n_ + 1) * (n_ + 1); }
  int num_faces_per_axis() const { return n_ * n_ * (n_ + 1); }

  int cell_index(const Lattice& c) const { return c[0] + n_ * (c[1] + n_ * c[2]); }
  Lattice cell_lattice(int cell) const;
  int vertex_index(const Lattice& v) const { return v[0] + (n_ + 1) * (v[1] + (n_ + 1) * v[2]); }
  Lattice vertex_lattice(int vertex) const;
  int edge_index(int axis, const Lattice& l) const;
  int face_index(int axis, const Lattice& l) const;
  /// Axis and lattice coordinates of a global edge / face.
  std::pair<int, Lattice> edge_lattice(int edge) const;
  std::pair<int, Lattice> face_lattice(int face) const;

  Vec3 cell_center(int cell) const;

  std::array<int, 12> cell_edges(int cell) const;
  std::array<int, 6> cell_faces(int cell) const;
  std::array<int, 8> cell_vertices(int cell) const;

  bool vertex_on_boundary(int vertex) const { return vertex_boundary_[vertex] != 0; }
  bool edge_on_boundary(int edge) const { return edge_boundary_[edge] != 0; }
  bool face_on_boundary(int face) const { return face_boundary_[face] != 0; }

 private:
  void classify_boundary();

  int n_;
  Vec3 h_axis_;
  double h_diag_;
  std::vector<std::uint8_t> vertex_boundary_;
  std::vector<std::uint8_t> edge_boundary_;
  std::vector<std::uint8_t> face_boundary_;
};

BrickMesh build_mesh(int n);

struct BoundaryCounts {
  int interior_vertices = 0;
  int interior_edges = 0;
  int interior_faces = 0;
  std::array<int, 3> interior_edges_per_axis{};
  std::array<int, 3> interior_faces_per_axis{};
};

BoundaryCounts classify_boundary(const BrickMesh& mesh);

/// A 3x3x3 block of cells with the fine edges and faces it contains, listed in
/// the macro-local order used by the macro element spaces (axis-major,
/// lexicographic, extent 3 along the entity axis and 4 across for edges; 4
/// along the normal and 3 across for faces).
struct Macroelement {
  Lattice origin;  ///< lattice coordinates of the lowest cell
  std::array<int, 27> cells;
  std::array<int, 144> edges;
  std::array<int, 108> faces;
};

struct MacroPartition {
  int macros_per_axis = 0;
  std::vector<Macroelement> macros;
};

/// Throws NonDivisibleMesh when n is not a multiple of 3.
MacroPartition macro_partition(const BrickMesh& mesh);

}  // namespace qcurl
