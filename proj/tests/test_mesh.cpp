#include <set>

#include <gtest/gtest.h>

#include "qcurl/mesh.hpp"

using namespace qcurl;

TEST(Mesh, EntityCounts) {
  for (int n : {1, 2, 3, 5}) {
    const BrickMesh m(n);
    EXPECT_EQ(m.num_cells(), n * n * n);
    EXPECT_EQ(m.num_vertices(), (n + 1) * (n + 1) * (n + 1));
    EXPECT_EQ(m.num_edges(), 3 * n * (n + 1) * (n + 1));
    EXPECT_EQ(m.num_faces(), 3 * n * n * (n + 1));
    EXPECT_DOUBLE_EQ(m.h(), 1.0 / n);
  }
}

TEST(Mesh, InteriorCounts) {
  const int n = 4;
  const BoundaryCounts c = classify_boundary(BrickMesh(n));
  EXPECT_EQ(c.interior_vertices, (n - 1) * (n - 1) * (n - 1));
  EXPECT_EQ(c.interior_edges, 3 * n * (n - 1) * (n - 1));
  EXPECT_EQ(c.interior_faces, 3 * n * n * (n - 1));
}

TEST(Mesh, LatticeRoundTrip) {
  const BrickMesh m(3);
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [a, l] = m.edge_lattice(e);
    EXPECT_EQ(m.edge_index(a, l), e);
  }
  for (int f = 0; f < m.num_faces(); ++f) {
    const auto [a, l] = m.face_lattice(f);
    EXPECT_EQ(m.face_index(a, l), f);
  }
  for (int c = 0; c < m.num_cells(); ++c) EXPECT_EQ(m.cell_index(m.cell_lattice(c)), c);
}

TEST(Mesh, LocalNumbering) {
  const BrickMesh m(3);
  const int cell = m.cell_index({1, 2, 0});
  const auto edges = m.cell_edges(cell);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto [axis, l] = m.edge_lattice(edges[4 * a + b]);
      EXPECT_EQ(axis, a);
      const auto o = a == 0 ? std::array<int, 2>{1, 2} : (a == 1 ? std::array<int, 2>{0, 2} : std::array<int, 2>{0, 1});
      const Lattice base{1, 2, 0};
      EXPECT_EQ(l[a], base[a]);
      EXPECT_EQ(l[o[0]], base[o[0]] + (b & 1));
      EXPECT_EQ(l[o[1]], base[o[1]] + (b >> 1));
    }
  }
  const auto faces = m.cell_faces(cell);
  for (int a = 0; a < 3; ++a) {
    for (int s = 0; s < 2; ++s) {
      const auto [axis, l] = m.face_lattice(faces[2 * a + s]);
      EXPECT_EQ(axis, a);
      Lattice expect{1, 2, 0};
      expect[a] += s;
      EXPECT_EQ(l, expect);
    }
  }
  const auto verts = m.cell_vertices(cell);
  EXPECT_EQ(m.vertex_lattice(verts[0]), (Lattice{1, 2, 0}));
  EXPECT_EQ(m.vertex_lattice(verts[7]), (Lattice{2, 3, 1}));
  EXPECT_EQ(m.vertex_lattice(verts[2]), (Lattice{1, 3, 0}));
}

TEST(Mesh, MacroPartitionCoversCells) {
  const BrickMesh m(6);
  const MacroPartition p = macro_partition(m);
  EXPECT_EQ(p.macros_per_axis, 2);
  ASSERT_EQ(p.macros.size(), 8u);
  std::set<int> cells;
  std::set<int> edges;
  for (const Macroelement& mac : p.macros) {
    cells.insert(mac.cells.begin(), mac.cells.end());
    edges.insert(mac.edges.begin(), mac.edges.end());
  }
  EXPECT_EQ(static_cast<int>(cells.size()), m.num_cells());
  // Edges on shared macro faces are counted once.
  EXPECT_EQ(static_cast<int>(edges.size()), m.num_edges());
}

TEST(Mesh, MacroLocalOrder) {
  const BrickMesh m(3);
  const Macroelement mac = macro_partition(m).macros[0];
  // x-edges: extent 3 along x, 4 across y and z, x fastest.
  const auto [a0, l0] = m.edge_lattice(mac.edges[0]);
  const auto [a1, l1] = m.edge_lattice(mac.edges[1]);
  const auto [a3, l3] = m.edge_lattice(mac.edges[3]);
  EXPECT_EQ(a0, 0);
  EXPECT_EQ(l0, (Lattice{0, 0, 0}));
  EXPECT_EQ(l1, (Lattice{1, 0, 0}));
  EXPECT_EQ(l3, (Lattice{0, 1, 0}));
  const auto [ay, ly] = m.edge_lattice(mac.edges[48]);
  EXPECT_EQ(ay, 1);
  EXPECT_EQ(ly, (Lattice{0, 0, 0}));
  const auto [fa, fl] = m.face_lattice(mac.faces[36]);
  EXPECT_EQ(fa, 1);
  EXPECT_EQ(fl, (Lattice{0, 0, 0}));
}

TEST(Mesh, NonDivisibleMeshThrows) {
  EXPECT_THROW(macro_partition(BrickMesh(4)), NonDivisibleMesh);
  EXPECT_THROW(BrickMesh(0), InvalidArgument);
}
