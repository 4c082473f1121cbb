#include "qcurl/interp.hpp"

#include <cmath>

#include "qcurl/quadrature.hpp"

namespace qcurl {

namespace {

Polynomial to_physical(const Polynomial& p, const ElementFrame& frame) {
  std::array<Polynomial, 3> ref;
  for (int a = 0; a < 3; ++a) {
    ref[a] = (1.0 / frame.size) * (Polynomial::coordinate(a) - Polynomial::constant(frame.center[a]));
  }
  Polynomial out;
  p.for_each_term([&](const MultiIndex& e, double c) {
    Polynomial term = Polynomial::constant(c);
    for (int a = 0; a < 3; ++a) {
      for (int r = 0; r < e[a]; ++r) term = term * ref[a];
    }
    out += term;
  });
  return out;
}

/// Physical axis box of an edge given by axis and lattice coordinates.
AxisBox edge_box(const BrickMesh& mesh, int axis, const Lattice& l) {
  const double h = mesh.h();
  AxisBox box;
  for (int d = 0; d < 3; ++d) box.lo[d] = box.hi[d] = l[d] * h;
  box.hi[axis] += h;
  return box;
}

AxisBox face_box(const BrickMesh& mesh, int axis, const Lattice& l) {
  const double h = mesh.h();
  AxisBox box;
  for (int d = 0; d < 3; ++d) {
    box.lo[d] = l[d] * h;
    box.hi[d] = box.lo[d] + h;
  }
  box.hi[axis] = box.lo[axis];
  return box;
}

double edge_integral(const SmoothField& v, const AxisBox& box, int axis, const GaussRule& rule) {
  return integrate_gauss([&](const Vec3& x) { return v.value(x)[axis]; }, box, rule);
}

/// int_F g + (h^2/12) d_k^2 g, with g = (curl v)_k when `of_curl`, else v_k.
double corrected_face_integral(const SmoothField& v, bool of_curl, const AxisBox& box, int k, double h,
                               bool correction, const GaussRule& rule) {
  const MultiIndex second = shifted({0, 0, 0}, k, 2);
  const double weight = correction ? h * h / 12.0 : 0.0;
  return integrate_gauss(
      [&](const Vec3& x) {
        const double g = of_curl ? v.curl(x)[k] : v.value(x)[k];
        if (weight == 0.0) return g;
        const double d2 = of_curl ? v.curl_derivative(second, x)[k] : v.derivative(second, x)[k];
        return g + weight * d2;
      },
      box, rule);
}

double global_Ih_entry(const SmoothField& v, const GlobalDofMap& dofs, int dof, const InterpOptions& options,
                       const GaussRule& rule) {
  const BrickMesh& mesh = dofs.mesh();
  if (dof < dofs.num_edge_dofs()) {
    const auto [axis, l] = mesh.edge_lattice(dofs.edge_of_dof(dof));
    return edge_integral(v, edge_box(mesh, axis, l), axis, rule);
  }
  const auto [axis, l] = mesh.face_lattice(dofs.face_of_dof(dof));
  const int k = other_axes(axis)[(dof - dofs.num_edge_dofs()) % 2];
  return corrected_face_integral(v, true, face_box(mesh, axis, l), k, mesh.h(), options.correction, rule);
}

}  // namespace

ElementFrame ElementFrame::cell(const BrickMesh& mesh, int cell) { return {mesh.cell_center(cell), mesh.h()}; }

ElementFrame ElementFrame::macro(const BrickMesh& mesh, const Macroelement& macro) {
  const double h = mesh.h();
  return {{(macro.origin[0] + 1.5) * h, (macro.origin[1] + 1.5) * h, (macro.origin[2] + 1.5) * h}, 3.0 * h};
}

PolyField LocalInterpolant::physical_field() const {
  return PolyField(to_physical(field[0], frame), to_physical(field[1], frame), to_physical(field[2], frame));
}

PolyField field_from_dofs(const ElementSpace& space, std::span<const double> dofs, double size) {
  const double scale = 1.0 / std::pow(size, space.scaling_power);
  PolyField out;
  for (std::size_t j = 0; j < dofs.size(); ++j) {
    if (dofs[j] != 0.0) out += (scale * dofs[j]) * space.dual[j];
  }
  return out;
}

Eigen::VectorXd physical_dofs(const ElementSpace& space, const SmoothField& field, const ElementFrame& frame,
                              const InterpOptions& options) {
  const GaussRule rule(options.quad_order);
  Eigen::VectorXd out(space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    const DofFunctional& dof = space.dofs[i];
    const AxisBox box = frame.to_physical(dof.region);
    switch (dof.kind) {
      case DofKind::EdgeTangential:
      case DofKind::FaceNormal:
        out[i] = edge_integral(field, box, dof.axis, rule);
        break;
      case DofKind::FaceTangential:
        out[i] = corrected_face_integral(field, false, box, dof.axis, frame.size, options.correction, rule);
        break;
      case DofKind::FaceTangentialCurl:
        out[i] = corrected_face_integral(field, true, box, dof.axis, frame.size, options.correction, rule);
        break;
      case DofKind::VertexValue:
        out[i] = field.value(box.lo)[0];
        break;
    }
  }
  return out;
}

Eigen::VectorXd reference_dofs(const ElementSpace& space, const PolyField& v, bool correction) {
  const PolyField curl_v = v.curl();
  Eigen::VectorXd out(space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    const DofFunctional& dof = space.dofs[i];
    out[i] = dof.apply(v, curl_v);
    if (!correction) continue;
    const MultiIndex second = shifted({0, 0, 0}, dof.axis, 2);
    if (dof.kind == DofKind::FaceTangential) {
      out[i] += v[dof.axis].derivative(second).integrate(dof.region) / 12.0;
    } else if (dof.kind == DofKind::FaceTangentialCurl) {
      out[i] += curl_v[dof.axis].derivative(second).integrate(dof.region) / 12.0;
    }
  }
  return out;
}

namespace {

LocalInterpolant make_interpolant(const ElementSpace& space, const ElementFrame& frame, Eigen::VectorXd dofs) {
  LocalInterpolant li{space.tag, frame, std::move(dofs), {}};
  li.field = field_from_dofs(space, {li.dofs.data(), static_cast<std::size_t>(li.dofs.size())}, frame.size);
  return li;
}

}  // namespace

LocalInterpolant interp_PiK(const SmoothField& w, const ElementFrame& frame, const SpaceLibrary& lib,
                            const InterpOptions& options) {
  return make_interpolant(lib.wk, frame, physical_dofs(lib.wk, w, frame, options));
}

LocalInterpolant interp_IK(const SmoothField& v, const ElementFrame& frame, const SpaceLibrary& lib,
                           const InterpOptions& options) {
  return make_interpolant(lib.vk, frame, physical_dofs(lib.vk, v, frame, options));
}

LocalInterpolant interp_nedelec(const SmoothField& v, const ElementFrame& frame, const SpaceLibrary& lib,
                                int quad_order) {
  return make_interpolant(lib.nedelec, frame, physical_dofs(lib.nedelec, v, frame, {false, quad_order}));
}

LocalInterpolant interp_nedelec_of_vk(std::span<const double> vk_dofs, const ElementFrame& frame,
                                      const SpaceLibrary& lib) {
  Eigen::VectorXd edge(12);
  for (int e = 0; e < 12; ++e) edge[e] = vk_dofs[e];
  return make_interpolant(lib.nedelec, frame, std::move(edge));
}

LocalInterpolant interp_IM(const SmoothField& v, const ElementFrame& macro_frame, const SpaceLibrary& lib,
                           int quad_order) {
  return make_interpolant(lib.vm, macro_frame, physical_dofs(lib.vm, v, macro_frame, {false, quad_order}));
}

LocalInterpolant interp_PiM(const SmoothField& w, const ElementFrame& macro_frame, const SpaceLibrary& lib,
                            int quad_order) {
  return make_interpolant(lib.wm, macro_frame, physical_dofs(lib.wm, w, macro_frame, {false, quad_order}));
}

LocalInterpolant interp_IM_from_edge_dofs(std::span<const double> edge_dofs, const ElementFrame& macro_frame,
                                          const SpaceLibrary& lib) {
  Eigen::VectorXd d(144);
  for (int i = 0; i < 144; ++i) d[i] = edge_dofs[i];
  return make_interpolant(lib.vm, macro_frame, std::move(d));
}

DofVector global_Ih(const SmoothField& v, const GlobalDofMap& dofs, const InterpOptions& options) {
  const GaussRule rule(options.quad_order);
  DofVector out{DofTag::Velocity, Eigen::VectorXd::Zero(dofs.num_velocity())};
  const int n = dofs.num_velocity();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out.values[i] = global_Ih_entry(v, dofs, i, options, rule);
  return out;
}

DofVector reference::global_Ih(const SmoothField& v, const GlobalDofMap& dofs, const InterpOptions& options) {
  const GaussRule rule(options.quad_order);
  DofVector out{DofTag::Velocity, Eigen::VectorXd::Zero(dofs.num_velocity())};
  for (int i = 0; i < dofs.num_velocity(); ++i) out.values[i] = global_Ih_entry(v, dofs, i, options, rule);
  return out;
}

Eigen::VectorXd global_Pih(const SmoothField& w, const GlobalDofMap& dofs, const InterpOptions& options) {
  const BrickMesh& mesh = dofs.mesh();
  const GaussRule rule(options.quad_order);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dofs.num_w());
  const int nf = mesh.num_faces();
#pragma omp parallel for schedule(static)
  for (int f = 0; f < nf; ++f) {
    if (dofs.w_dof(f, 0) < 0) continue;
    const auto [axis, l] = mesh.face_lattice(f);
    const AxisBox box = face_box(mesh, axis, l);
    const auto [t1, t2] = other_axes(axis);
    out[dofs.w_dof(f, 0)] = corrected_face_integral(w, false, box, t1, mesh.h(), options.correction, rule);
    out[dofs.w_dof(f, 1)] = corrected_face_integral(w, false, box, t2, mesh.h(), options.correction, rule);
    out[dofs.w_dof(f, 2)] = edge_integral(w, box, axis, rule);
  }
  return out;
}

Eigen::VectorXd global_ICh(const DofVector& vh, const GlobalDofMap& dofs) {
  return vh.values.head(dofs.num_edge_dofs());
}

MacroField global_I3h(const DofVector& vh, const GlobalDofMap& dofs, const SpaceLibrary& lib) {
  const BrickMesh& mesh = dofs.mesh();
  MacroField out;
  out.partition = macro_partition(mesh);
  const int nm = static_cast<int>(out.partition.macros.size());
  out.frames.resize(nm);
  out.fields.resize(nm);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < nm; ++m) {
    const Macroelement& macro = out.partition.macros[m];
    std::array<double, 144> edge{};
    for (int i = 0; i < 144; ++i) edge[i] = vh[dofs.edge_dof(macro.edges[i])];
    out.frames[m] = ElementFrame::macro(mesh, macro);
    out.fields[m] = field_from_dofs(lib.vm, edge, out.frames[m].size);
  }
  return out;
}

MacroField global_I3h(const SmoothField& v, const GlobalDofMap& dofs, const SpaceLibrary& lib, int quad_order) {
  const BrickMesh& mesh = dofs.mesh();
  const GaussRule rule(quad_order);
  MacroField out;
  out.partition = macro_partition(mesh);
  const int nm = static_cast<int>(out.partition.macros.size());
  out.frames.resize(nm);
  out.fields.resize(nm);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < nm; ++m) {
    const Macroelement& macro = out.partition.macros[m];
    std::array<double, 144> edge{};
    for (int i = 0; i < 144; ++i) {
      const auto [axis, l] = mesh.edge_lattice(macro.edges[i]);
      edge[i] = edge_integral(v, edge_box(mesh, axis, l), axis, rule);
    }
    out.frames[m] = ElementFrame::macro(mesh, macro);
    out.fields[m] = field_from_dofs(lib.vm, edge, out.frames[m].size);
  }
  return out;
}

}  // namespace qcurl
