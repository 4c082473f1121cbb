#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcurl/polynomial.hpp"

namespace qcurl {

enum class SpaceTag { WK, VK, NedelecK, Q1K, VM, WM };

std::string to_string(SpaceTag tag);

enum class DofKind {
  EdgeTangential,      ///< int_E v . t ds
  FaceTangentialCurl,  ///< int_F curl v . t_j dF
  FaceNormal,          ///< int_F w . n dF
  FaceTangential,      ///< int_F w . t_j dF
  VertexValue,         ///< q(vertex); scalar spaces store their field in component 0
};

/// A degree of freedom on the reference element ([-1/2, 1/2]^3 for both cells
/// and macroelements). Directions are always coordinate axes.
struct DofFunctional {
  DofKind kind;
  int entity;      ///< local entity index (edge, face or vertex)
  int axis;        ///< axis of the tangent / normal direction
  int normal_axis; ///< normal axis of the supporting face, -1 otherwise
  AxisBox region;

  Vec3 direction() const { return unit(axis); }
  /// Exact evaluation. `curl_v` must be curl(v) when kind == FaceTangentialCurl.
  double apply(const PolyField& v, const PolyField& curl_v) const;
  double apply(const PolyField& v) const;
};

/// Shape-function space with DoFs and the dual (nodal) basis.
///
/// The reference element has unit size. Physical DoF values relate to
/// reference ones by DoF_phys = size^scaling_power * DoF_ref, so the physical
/// field with DoF vector d is sum_j d_j / size^p * dual_j(x_ref).
struct ElementSpace {
  SpaceTag tag;
  std::vector<PolyField> span;
  std::vector<DofFunctional> dofs;
  Eigen::MatrixXd vandermonde;        ///< (i, j) = DoF_i(span_j)
  Eigen::MatrixXd dual_coefficients;  ///< dual_j = sum_k span_k * C(k, j)
  std::vector<PolyField> dual;
  double condition_number = 0.0;
  int scaling_power = 0;

  int dim() const { return static_cast<int>(span.size()); }
  /// (i, j) = DoF_i(fields_j), exact.
  Eigen::MatrixXd dof_matrix(const std::vector<PolyField>& fields) const;
  Eigen::VectorXd apply_dofs(const PolyField& v) const;
  /// sum_j coeffs_j * dual_j
  PolyField combine(std::span<const double> coeffs) const;
  /// max |DoF_i(dual_j) - delta_ij|
  double duality_defect() const;
};

struct SpaceOptions {
  /// Fault-injection hook: adds this multiple of x1*x2*x3 to the first
  /// component of one (x - x_K) x W_K spanning field.
  double vk_perturbation = 0.0;
};

/// 18 monomial generators of W_K on the reference cell.
std::vector<PolyField> span_WK();
/// 24 independent fields spanning grad Q1 + (x - x_K) x W_K. Throws DegenerateSpan.
std::vector<PolyField> span_VK(const SpaceOptions& options = {});
std::vector<PolyField> span_nedelec();
std::vector<PolyField> span_Q1();
std::vector<PolyField> span_VM();
std::vector<PolyField> span_WM();

std::vector<DofFunctional> dofs_for(SpaceTag tag);

/// Inverts the Vandermonde matrix in place. Throws SingularVandermonde.
void dual_basis(ElementSpace& space);

ElementSpace build_space(SpaceTag tag, const SpaceOptions& options = {});

/// Largest least-squares residual of curl(dual_j of v_space) against span(w_space),
/// relative to the largest coefficient of that curl (at least 1).
double curl_inclusion_residual(const ElementSpace& v_space, const ElementSpace& w_space);
bool check_curl_inclusion(const ElementSpace& v_space, const ElementSpace& w_space, double tol = 1e-12);

/// Numerical rank of a list of polynomial fields (coefficient-space, relative threshold).
int numerical_rank(const std::vector<PolyField>& fields, double rel_tol = 1e-10);

/// Every space used by the method, built once on the reference elements.
struct SpaceLibrary {
  ElementSpace wk;
  ElementSpace vk;
  ElementSpace nedelec;
  ElementSpace q1;
  ElementSpace vm;
  ElementSpace wm;

  static SpaceLibrary build(const SpaceOptions& options = {});
  const ElementSpace& get(SpaceTag tag) const;
};

/// Shared immutable instance with default options.
const SpaceLibrary& reference_spaces();

/// Reference macro edges/faces are subdivided into thirds.
inline constexpr int kMacroCells = 3;

}  // namespace qcurl
