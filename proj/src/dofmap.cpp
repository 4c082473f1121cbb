#include "qcurl/dofmap.hpp"

namespace qcurl {

GlobalDofMap::GlobalDofMap(const BrickMesh& mesh) : mesh_(mesh) {
  edge_dof_.assign(mesh.num_edges(), -1);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.edge_on_boundary(e)) {
      edge_dof_[e] = num_edge_dofs_++;
      dof_edge_.push_back(e);
    }
  }
  face_slot_.assign(mesh.num_faces(), -1);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (!mesh.face_on_boundary(f)) {
      face_slot_[f] = num_interior_faces_++;
      dof_face_.push_back(f);
    }
  }
  vertex_dof_.assign(mesh.num_vertices(), -1);
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (!mesh.vertex_on_boundary(v)) {
      vertex_dof_[v] = num_pressure_++;
      dof_vertex_.push_back(v);
    }
  }
}

std::array<int, 24> GlobalDofMap::cell_velocity_dofs(int cell) const {
  std::array<int, 24> out{};
  const auto edges = mesh_.cell_edges(cell);
  const auto faces = mesh_.cell_faces(cell);
  for (int e = 0; e < 12; ++e) out[e] = edge_dof_[edges[e]];
  for (int f = 0; f < 6; ++f) {
    out[12 + 2 * f] = face_dof(faces[f], 0);
    out[12 + 2 * f + 1] = face_dof(faces[f], 1);
  }
  return out;
}

std::array<int, 8> GlobalDofMap::cell_pressure_dofs(int cell) const {
  std::array<int, 8> out{};
  const auto verts = mesh_.cell_vertices(cell);
  for (int v = 0; v < 8; ++v) out[v] = vertex_dof_[verts[v]];
  return out;
}

std::array<int, 18> GlobalDofMap::cell_w_dofs(int cell) const {
  std::array<int, 18> out{};
  const auto faces = mesh_.cell_faces(cell);
  for (int f = 0; f < 6; ++f) {
    for (int j = 0; j < 3; ++j) out[3 * f + j] = w_dof(faces[f], j);
  }
  return out;
}

}  // namespace qcurl
