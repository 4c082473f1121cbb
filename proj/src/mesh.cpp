#include "qcurl/mesh.hpp"

#include <cmath>
#include <string>

namespace qcurl {

namespace {

int flat(const Lattice& l, const Lattice& ext) { return l[0] + ext[0] * (l[1] + ext[1] * l[2]); }

Lattice unflat(int idx, const Lattice& ext) {
  Lattice l{};
  l[0] = idx % ext[0];
  idx /= ext[0];
  l[1] = idx % ext[1];
  l[2] = idx / ext[1];
  return l;
}

Lattice edge_extent(int n, int axis) {
  Lattice e{n + 1, n + 1, n + 1};
  e[axis] = n;
  return e;
}

Lattice face_extent(int n, int axis) {
  Lattice e{n, n, n};
  e[axis] = n + 1;
  return e;
}

bool on_boundary_coord(int c, int n) { return c == 0 || c == n; }

}  // namespace

BrickMesh::BrickMesh(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("mesh size must be positive, got n=" + std::to_string(n));
  const double h = 1.0 / n;
  h_axis_ = {h, h, h};
  h_diag_ = std::sqrt(3.0) * h;
  classify_boundary();
}

Lattice BrickMesh::cell_lattice(int cell) const { return unflat(cell, {n_, n_, n_}); }

Lattice BrickMesh::vertex_lattice(int vertex) const { return unflat(vertex, {n_ + 1, n_ + 1, n_ + 1}); }

int BrickMesh::edge_index(int axis, const Lattice& l) const {
  return axis * num_edges_per_axis() + flat(l, edge_extent(n_, axis));
}

int BrickMesh::face_index(int axis, const Lattice& l) const {
  return axis * num_faces_per_axis() + flat(l, face_extent(n_, axis));
}

std::pair<int, Lattice> BrickMesh::edge_lattice(int edge) const {
  const int axis = edge / num_edges_per_axis();
  return {axis, unflat(edge % num_edges_per_axis(), edge_extent(n_, axis))};
}

std::pair<int, Lattice> BrickMesh::face_lattice(int face) const {
  const int axis = face / num_faces_per_axis();
  return {axis, unflat(face % num_faces_per_axis(), face_extent(n_, axis))};
}

Vec3 BrickMesh::cell_center(int cell) const {
  const Lattice c = cell_lattice(cell);
  return {(c[0] + 0.5) * h_axis_[0], (c[1] + 0.5) * h_axis_[1], (c[2] + 0.5) * h_axis_[2]};
}

std::array<int, 12> BrickMesh::cell_edges(int cell) const {
  const Lattice c = cell_lattice(cell);
  std::array<int, 12> out{};
  for (int a = 0; a < 3; ++a) {
    const auto [o0, o1] = other_axes(a);
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int b0 = 0; b0 < 2; ++b0) {
        Lattice l = c;
        l[o0] += b0;
        l[o1] += b1;
        out[4 * a + b0 + 2 * b1] = edge_index(a, l);
      }
    }
  }
  return out;
}

std::array<int, 6> BrickMesh::cell_faces(int cell) const {
  const Lattice c = cell_lattice(cell);
  std::array<int, 6> out{};
  for (int a = 0; a < 3; ++a) {
    for (int s = 0; s < 2; ++s) {
      Lattice l = c;
      l[a] += s;
      out[2 * a + s] = face_index(a, l);
    }
  }
  return out;
}

std::array<int, 8> BrickMesh::cell_vertices(int cell) const {
  const Lattice c = cell_lattice(cell);
  std::array<int, 8> out{};
  for (int v = 0; v < 8; ++v) {
    out[v] = vertex_index({c[0] + (v & 1), c[1] + ((v >> 1) & 1), c[2] + ((v >> 2) & 1)});
  }
  return out;
}

void BrickMesh::classify_boundary() {
  vertex_boundary_.assign(num_vertices(), 0);
  edge_boundary_.assign(num_edges(), 0);
  face_boundary_.assign(num_faces(), 0);
  for (int v = 0; v < num_vertices(); ++v) {
    const Lattice l = vertex_lattice(v);
    vertex_boundary_[v] = on_boundary_coord(l[0], n_) || on_boundary_coord(l[1], n_) || on_boundary_coord(l[2], n_);
  }
  for (int e = 0; e < num_edges(); ++e) {
    const auto [a, l] = edge_lattice(e);
    const auto [o0, o1] = other_axes(a);
    edge_boundary_[e] = on_boundary_coord(l[o0], n_) || on_boundary_coord(l[o1], n_);
  }
  for (int f = 0; f < num_faces(); ++f) {
    const auto [a, l] = face_lattice(f);
    face_boundary_[f] = on_boundary_coord(l[a], n_);
  }
}

BrickMesh build_mesh(int n) { return BrickMesh(n); }

BoundaryCounts classify_boundary(const BrickMesh& mesh) {
  BoundaryCounts counts;
  for (int v = 0; v < mesh.num_vertices(); ++v) counts.interior_vertices += !mesh.vertex_on_boundary(v);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.edge_on_boundary(e)) {
      ++counts.interior_edges;
      ++counts.interior_edges_per_axis[mesh.edge_lattice(e).first];
    }
  }
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (!mesh.face_on_boundary(f)) {
      ++counts.interior_faces;
      ++counts.interior_faces_per_axis[mesh.face_lattice(f).first];
    }
  }
  return counts;
}

MacroPartition macro_partition(const BrickMesh& mesh) {
  const int n = mesh.n();
  if (n % 3 != 0) throw NonDivisibleMesh(n);
  MacroPartition part;
  part.macros_per_axis = n / 3;
  const int m = part.macros_per_axis;
  part.macros.reserve(static_cast<std::size_t>(m) * m * m);
  for (int mk = 0; mk < m; ++mk) {
    for (int mj = 0; mj < m; ++mj) {
      for (int mi = 0; mi < m; ++mi) {
        Macroelement macro;
        macro.origin = {3 * mi, 3 * mj, 3 * mk};
        const Lattice& o = macro.origin;
        for (int c = 0; c < 27; ++c) {
          const Lattice l = unflat(c, {3, 3, 3});
          macro.cells[c] = mesh.cell_index({o[0] + l[0], o[1] + l[1], o[2] + l[2]});
        }
        for (int a = 0; a < 3; ++a) {
          Lattice ext{4, 4, 4};
          ext[a] = 3;
          for (int i = 0; i < 48; ++i) {
            const Lattice l = unflat(i, ext);
            macro.edges[48 * a + i] = mesh.edge_index(a, {o[0] + l[0], o[1] + l[1], o[2] + l[2]});
          }
          Lattice fext{3, 3, 3};
          fext[a] = 4;
          for (int i = 0; i < 36; ++i) {
            const Lattice l = unflat(i, fext);
            macro.faces[36 * a + i] = mesh.face_index(a, {o[0] + l[0], o[1] + l[1], o[2] + l[2]});
          }
        }
        part.macros.push_back(macro);
      }
    }
  }
  return part;
}

}  // namespace qcurl
