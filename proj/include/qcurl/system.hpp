#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qcurl/dofmap.hpp"
#include "qcurl/field.hpp"
#include "qcurl/spaces.hpp"

namespace qcurl {

using SparseMatrix = Eigen::SparseMatrix<double>;
using VectorFunction = std::function<Vec3(const Vec3&)>;

enum class Scheme { Original, Modified };

std::string to_string(Scheme scheme);

/// Element matrices of the V_K dual basis on the unit reference cell, exact.
/// On a cell of size h the physical matrices are
///   grad_curl * h^-3, curl_mass * h^-1, mass * h, grad_pressure * h.
struct ReferenceMatrices {
  Eigen::Matrix<double, 24, 24> mass;
  Eigen::Matrix<double, 24, 24> curl_mass;
  Eigen::Matrix<double, 24, 24> grad_curl;
  /// (i, m) = (phi_i, grad psi_m) with psi the Q1 vertex duals.
  Eigen::Matrix<double, 24, 8> grad_pressure;

  static ReferenceMatrices build(const SpaceLibrary& lib);
};

/// Values of the reference dual bases at the Gauss points of the unit cell.
struct CellTabulation {
  std::vector<Vec3> points;  ///< reference coordinates
  std::vector<double> weights;
  /// [point][dof]
  std::vector<std::array<Vec3, 24>> vk_value;
  std::vector<std::array<Vec3, 24>> vk_curl;
  std::vector<std::array<Mat3, 24>> vk_grad_curl;
  std::vector<std::array<Vec3, 12>> nedelec_value;

  static CellTabulation build(const SpaceLibrary& lib, int quad_order);
  int num_points() const { return static_cast<int>(points.size()); }
};

SparseMatrix assemble_A(const GlobalDofMap& dofs, const ReferenceMatrices& ref);
SparseMatrix assemble_B(const GlobalDofMap& dofs, const ReferenceMatrices& ref);

/// Original: (f, v_h). Modified: (f, I^C_h v_h), so face-curl entries are 0.
Eigen::VectorXd assemble_rhs(const GlobalDofMap& dofs, const CellTabulation& tab, const VectorFunction& f,
                             Scheme scheme);

namespace reference {

SparseMatrix assemble_A(const GlobalDofMap& dofs, const ReferenceMatrices& ref);
SparseMatrix assemble_B(const GlobalDofMap& dofs, const ReferenceMatrices& ref);
Eigen::VectorXd assemble_rhs(const GlobalDofMap& dofs, const CellTabulation& tab, const VectorFunction& f,
                             Scheme scheme);

}  // namespace reference

/// [[A, B], [B^T, 0]] z = [rhs, 0] on the interior DoFs.
struct SaddleSystem {
  SparseMatrix A;
  SparseMatrix B;
  Eigen::VectorXd rhs_u;

  int num_velocity() const { return static_cast<int>(A.rows()); }
  int num_pressure() const { return static_cast<int>(B.cols()); }
  int size() const { return num_velocity() + num_pressure(); }
  SparseMatrix full() const;
  Eigen::VectorXd rhs() const;
};

SaddleSystem build_system(const GlobalDofMap& dofs, const SpaceLibrary& lib, const VectorFunction& f, Scheme scheme,
                          int quad_order = 6);

/// Writes "row col value" lines (0-based), preceded by a "rows cols nnz" line.
void export_coordinate(const SparseMatrix& m, const std::string& path);

}  // namespace qcurl
