#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "qcurl/mesh.hpp"

namespace qcurl {

/// Global numbering of the homogeneous discrete spaces. Boundary DoFs vanish
/// and are not numbered (index -1).
///
///   V_h : interior edges (tangential integral), then 2 per interior face
///         (tangential curl integrals along t1, t2)
///   Q_h : interior vertices
///   W_h : 3 per interior face (t1, t2, normal)
///   V^C_h (lowest-order Nedelec): interior edges
///
/// Edge DoFs of V_h come first, so the leading num_edge_dofs() entries of a V_h
/// vector are also its Nedelec DoFs.
class GlobalDofMap {
 public:
  explicit GlobalDofMap(const BrickMesh& mesh);

  int num_velocity() const { return num_edge_dofs_ + 2 * num_interior_faces_; }
  int num_edge_dofs() const { return num_edge_dofs_; }
  int num_face_dofs() const { return 2 * num_interior_faces_; }
  int num_pressure() const { return num_pressure_; }
  int num_w() const { return 3 * num_interior_faces_; }

  int edge_dof(int edge) const { return edge_dof_[edge]; }
  /// j = 0, 1 selects t1 / t2.
  int face_dof(int face, int j) const { return face_slot_[face] < 0 ? -1 : num_edge_dofs_ + 2 * face_slot_[face] + j; }
  /// j = 0, 1, 2 selects t1 / t2 / normal.
  int w_dof(int face, int j) const { return face_slot_[face] < 0 ? -1 : 3 * face_slot_[face] + j; }
  int vertex_dof(int vertex) const { return vertex_dof_[vertex]; }

  /// Local V_K order: 12 edges, then 2 per face.
  std::array<int, 24> cell_velocity_dofs(int cell) const;
  std::array<int, 8> cell_pressure_dofs(int cell) const;
  /// Local W_K order: 3 per face.
  std::array<int, 18> cell_w_dofs(int cell) const;

  /// Inverse maps: global DoF -> entity.
  int edge_of_dof(int dof) const { return dof_edge_[dof]; }
  int face_of_dof(int dof) const { return dof_face_[(dof - num_edge_dofs_) / 2]; }
  int vertex_of_dof(int dof) const { return dof_vertex_[dof]; }

  const BrickMesh& mesh() const { return mesh_; }

 private:
  BrickMesh mesh_;
  int num_edge_dofs_ = 0;
  int num_interior_faces_ = 0;
  int num_pressure_ = 0;
  std::vector<int> edge_dof_;
  std::vector<int> face_slot_;
  std::vector<int> vertex_dof_;
  std::vector<int> dof_edge_;
  std::vector<int> dof_face_;
  std::vector<int> dof_vertex_;
};

enum class DofTag { Velocity, Pressure };

/// Coefficients of a discrete function in the numbering of a GlobalDofMap.
struct DofVector {
  DofTag tag = DofTag::Velocity;
  Eigen::VectorXd values;

  double operator[](int i) const { return i < 0 ? 0.0 : values[i]; }
  int size() const { return static_cast<int>(values.size()); }
};

}  // namespace qcurl
