#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qcurl/dofmap.hpp"
#include "qcurl/interp.hpp"
#include "qcurl/mms.hpp"
#include "qcurl/system.hpp"

namespace qcurl {

/// (|curl_h e|_{1,h}, ||curl_h e||_0, ||e||_0)
struct ErrorTriple {
  double grad_curl = 0.0;
  double curl = 0.0;
  double value = 0.0;

  double operator[](int i) const { return i == 0 ? grad_curl : (i == 1 ? curl : value); }
};

/// Exact field and derivatives sampled at a physical point.
using FieldSampler = std::function<ExactFields::Sample(const Vec3&)>;

FieldSampler sampler(const ExactFields& exact);
/// The zero field: error_vs_exact then yields the Gauss-quadrature norms of the discrete field.
FieldSampler zero_sampler();

/// Norms of exact - u_h with per-cell Gauss quadrature (the rule of `tab`).
ErrorTriple error_vs_exact(const DofVector& uh, const GlobalDofMap& dofs, const CellTabulation& tab,
                           const FieldSampler& exact);
/// Norms of exact - I_3h u_h, integrated over the fine cells of each macroelement.
ErrorTriple error_vs_exact(const MacroField& field, const GlobalDofMap& dofs, const CellTabulation& tab,
                           const FieldSampler& exact);

/// Exact norms of a V_h function from the reference element matrices.
ErrorTriple vh_norms(const DofVector& vh, const GlobalDofMap& dofs, const ReferenceMatrices& ref);

/// Norms of I_h u - u_h, exact in coefficient space.
ErrorTriple superclose_error(const DofVector& uh, const DofVector& ih_u, const GlobalDofMap& dofs,
                             const ReferenceMatrices& ref);

/// Norms of u - I_3h u_h. Throws NonDivisibleMesh.
ErrorTriple superconvergent_error(const DofVector& uh, const GlobalDofMap& dofs, const SpaceLibrary& lib,
                                  const CellTabulation& tab, const FieldSampler& exact);

/// EOC = log(e1 / e2) / log(n2 / n1) between consecutive rows; the first row has none.
/// Throws DegenerateError on non-positive errors or repeated n.
std::vector<std::array<double, 3>> compute_eoc(const std::vector<int>& n, const std::vector<ErrorTriple>& errors);

enum class Quantity {
  Errors,      ///< u - u_h
  Superclose,  ///< I_h u - u_h
  Superconv,   ///< u - I_3h u_h
};

std::string to_string(Quantity q);

struct ConvergenceReport {
  Scheme scheme = Scheme::Modified;
  Quantity quantity = Quantity::Errors;
  std::vector<int> n;
  std::vector<ErrorTriple> errors;

  void add(int n_value, const ErrorTriple& e);
  /// Empty entries for the first row.
  std::vector<std::array<double, 3>> eoc() const;
  std::string to_csv() const;
  std::string to_markdown() const;
};

namespace reference {

/// Serial twin of error_vs_exact for V_h functions.
ErrorTriple error_vs_exact(const DofVector& uh, const GlobalDofMap& dofs, const CellTabulation& tab,
                           const FieldSampler& exact);

}  // namespace reference

}  // namespace qcurl
