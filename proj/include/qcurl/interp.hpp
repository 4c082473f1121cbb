#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "qcurl/dofmap.hpp"
#include "qcurl/field.hpp"
#include "qcurl/mesh.hpp"
#include "qcurl/spaces.hpp"

namespace qcurl {

/// Affine map x = center + size * x_ref between a physical cube and the
/// reference element [-1/2, 1/2]^3.
struct ElementFrame {
  Vec3 center{0.0, 0.0, 0.0};
  double size = 1.0;

  static ElementFrame reference() { return {}; }
  static ElementFrame cell(const BrickMesh& mesh, int cell);
  static ElementFrame macro(const BrickMesh& mesh, const Macroelement& macro);

  Vec3 to_reference(const Vec3& x) const { return (1.0 / size) * (x - center); }
  Vec3 to_physical(const Vec3& xr) const { return center + size * xr; }
  AxisBox to_physical(const AxisBox& ref) const { return {to_physical(ref.lo), to_physical(ref.hi)}; }
};

/// Element function expressed in reference coordinates:
/// v(x) = field(x_ref), curl v = curl_ref(field) / size, and so on.
struct LocalInterpolant {
  SpaceTag space;
  ElementFrame frame;
  Eigen::VectorXd dofs;  ///< physical DoF values
  PolyField field;       ///< in reference coordinates

  Vec3 value(const Vec3& x) const { return field.evaluate(frame.to_reference(x)); }
  Vec3 curl(const Vec3& x) const { return (1.0 / frame.size) * field.curl().evaluate(frame.to_reference(x)); }
  /// The same function as a polynomial in physical coordinates (test helper).
  PolyField physical_field() const;
};

struct InterpOptions {
  /// Adds (h_k^2 / 12) d^2/dx_k^2 to the face tangential functionals of W_K and V_K.
  bool correction = true;
  int quad_order = 6;
};

/// Reference-coordinate field of the element function with the given physical DoFs.
PolyField field_from_dofs(const ElementSpace& space, std::span<const double> dofs, double size);

/// Physical DoF values of a smooth field, by Gauss quadrature on the element
/// entities (exact for polynomial fields of per-axis degree <= 2q - 1).
Eigen::VectorXd physical_dofs(const ElementSpace& space, const SmoothField& field, const ElementFrame& frame,
                              const InterpOptions& options = {});

/// DoF values of a reference-coordinate polynomial on the unit reference
/// element, by exact integration (the correction uses h = 1).
Eigen::VectorXd reference_dofs(const ElementSpace& space, const PolyField& v, bool correction);

/// Pi_K: modified face interpolation into W_K.
LocalInterpolant interp_PiK(const SmoothField& w, const ElementFrame& frame, const SpaceLibrary& lib,
                            const InterpOptions& options = {});
/// I_K (options.correction = true) or the canonical I^0_K (false) into V_K.
LocalInterpolant interp_IK(const SmoothField& v, const ElementFrame& frame, const SpaceLibrary& lib,
                           const InterpOptions& options = {});
/// I^C_K into the lowest-order Nedelec space.
LocalInterpolant interp_nedelec(const SmoothField& v, const ElementFrame& frame, const SpaceLibrary& lib,
                                int quad_order = 6);
/// I^C_K of a V_K function given by its 24 DoFs: the edge DoFs carry over unchanged.
LocalInterpolant interp_nedelec_of_vk(std::span<const double> vk_dofs, const ElementFrame& frame,
                                      const SpaceLibrary& lib);
LocalInterpolant interp_IM(const SmoothField& v, const ElementFrame& macro_frame, const SpaceLibrary& lib,
                           int quad_order = 6);
LocalInterpolant interp_PiM(const SmoothField& w, const ElementFrame& macro_frame, const SpaceLibrary& lib,
                            int quad_order = 6);
/// I_M from the 144 fine-edge integrals in macro order.
LocalInterpolant interp_IM_from_edge_dofs(std::span<const double> edge_dofs, const ElementFrame& macro_frame,
                                          const SpaceLibrary& lib);

/// Global I_h (or I^0_h) of a smooth field: one quadrature per interior entity.
DofVector global_Ih(const SmoothField& v, const GlobalDofMap& dofs, const InterpOptions& options = {});

/// Global Pi_h of a smooth field, in the W_h numbering of `dofs`.
Eigen::VectorXd global_Pih(const SmoothField& w, const GlobalDofMap& dofs, const InterpOptions& options = {});

/// I^C_h of a V_h function, as a vector over interior edges.
Eigen::VectorXd global_ICh(const DofVector& vh, const GlobalDofMap& dofs);

/// I_3h: one V_M polynomial per macroelement, stored in macro reference coordinates.
struct MacroField {
  MacroPartition partition;
  std::vector<ElementFrame> frames;
  std::vector<PolyField> fields;
};

MacroField global_I3h(const DofVector& vh, const GlobalDofMap& dofs, const SpaceLibrary& lib);
/// I_3h of a smooth field, from exact-by-quadrature fine-edge integrals.
MacroField global_I3h(const SmoothField& v, const GlobalDofMap& dofs, const SpaceLibrary& lib, int quad_order = 6);

namespace reference {

/// Serial twin of global_Ih.
DofVector global_Ih(const SmoothField& v, const GlobalDofMap& dofs, const InterpOptions& options = {});

}  // namespace reference

}  // namespace qcurl
