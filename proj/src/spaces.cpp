#include "qcurl/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace qcurl {

namespace {

constexpr double kLo = -0.5;

Polynomial mono(int a, int b, int c) { return Polynomial::monomial({a, b, c}); }

AxisBox cell_edge_region(int a, int b0, int b1) {
  const auto [o0, o1] = other_axes(a);
  AxisBox box;
  box.lo[a] = kLo;
  box.hi[a] = -kLo;
  box.lo[o0] = box.hi[o0] = kLo + b0;
  box.lo[o1] = box.hi[o1] = kLo + b1;
  return box;
}

AxisBox cell_face_region(int a, int s) {
  AxisBox box{{kLo, kLo, kLo}, {-kLo, -kLo, -kLo}};
  box.lo[a] = box.hi[a] = kLo + s;
  return box;
}

std::vector<DofFunctional> cell_edge_dofs() {
  std::vector<DofFunctional> dofs;
  for (int a = 0; a < 3; ++a) {
    for (int e = 0; e < 4; ++e) {
      dofs.push_back({DofKind::EdgeTangential, 4 * a + e, a, -1, cell_edge_region(a, e & 1, e >> 1)});
    }
  }
  return dofs;
}

std::vector<DofFunctional> wk_dofs() {
  std::vector<DofFunctional> dofs;
  for (int f = 0; f < 6; ++f) {
    const int a = f / 2;
    const auto [o0, o1] = other_axes(a);
    const AxisBox region = cell_face_region(a, f % 2);
    dofs.push_back({DofKind::FaceTangential, f, o0, a, region});
    dofs.push_back({DofKind::FaceTangential, f, o1, a, region});
    dofs.push_back({DofKind::FaceNormal, f, a, a, region});
  }
  return dofs;
}

std::vector<DofFunctional> vk_dofs() {
  std::vector<DofFunctional> dofs = cell_edge_dofs();
  for (int f = 0; f < 6; ++f) {
    const int a = f / 2;
    const auto [o0, o1] = other_axes(a);
    const AxisBox region = cell_face_region(a, f % 2);
    dofs.push_back({DofKind::FaceTangentialCurl, f, o0, a, region});
    dofs.push_back({DofKind::FaceTangentialCurl, f, o1, a, region});
  }
  return dofs;
}

std::vector<DofFunctional> q1_dofs() {
  std::vector<DofFunctional> dofs;
  for (int v = 0; v < 8; ++v) {
    const Vec3 p{kLo + (v & 1), kLo + ((v >> 1) & 1), kLo + ((v >> 2) & 1)};
    dofs.push_back({DofKind::VertexValue, v, 0, -1, {p, p}});
  }
  return dofs;
}

std::array<int, 3> unflat3(int idx, const std::array<int, 3>& ext) {
  return {idx % ext[0], (idx / ext[0]) % ext[1], idx / (ext[0] * ext[1])};
}

std::vector<DofFunctional> vm_dofs() {
  const double step = 1.0 / kMacroCells;
  std::vector<DofFunctional> dofs;
  for (int a = 0; a < 3; ++a) {
    std::array<int, 3> ext{kMacroCells + 1, kMacroCells + 1, kMacroCells + 1};
    ext[a] = kMacroCells;
    for (int i = 0; i < 48; ++i) {
      const auto l = unflat3(i, ext);
      AxisBox box;
      for (int d = 0; d < 3; ++d) box.lo[d] = box.hi[d] = kLo + l[d] * step;
      box.hi[a] = box.lo[a] + step;
      dofs.push_back({DofKind::EdgeTangential, 48 * a + i, a, -1, box});
    }
  }
  return dofs;
}

std::vector<DofFunctional> wm_dofs() {
  const double step = 1.0 / kMacroCells;
  std::vector<DofFunctional> dofs;
  for (int a = 0; a < 3; ++a) {
    std::array<int, 3> ext{kMacroCells, kMacroCells, kMacroCells};
    ext[a] = kMacroCells + 1;
    for (int i = 0; i < 36; ++i) {
      const auto l = unflat3(i, ext);
      AxisBox box;
      for (int d = 0; d < 3; ++d) {
        box.lo[d] = kLo + l[d] * step;
        box.hi[d] = box.lo[d] + step;
      }
      box.hi[a] = box.lo[a];
      dofs.push_back({DofKind::FaceNormal, 36 * a + i, a, a, box});
    }
  }
  return dofs;
}

/// Component-wise tensor space: exponent <= along_deg in the component's own
/// axis and <= across_deg in the other two.
std::vector<PolyField> anisotropic_tensor_span(int along_deg, int across_deg) {
  std::vector<PolyField> out;
  for (int c = 0; c < 3; ++c) {
    std::array<int, 3> max_exp{across_deg, across_deg, across_deg};
    max_exp[c] = along_deg;
    for (int k = 0; k <= max_exp[2]; ++k) {
      for (int j = 0; j <= max_exp[1]; ++j) {
        for (int i = 0; i <= max_exp[0]; ++i) out.push_back(PolyField::along(c, mono(i, j, k)));
      }
    }
  }
  return out;
}

MultiIndex common_extent(const std::vector<PolyField>& fields) {
  MultiIndex ext{1, 1, 1};
  for (const auto& f : fields) {
    for (int c = 0; c < 3; ++c) {
      for (int a = 0; a < 3; ++a) ext[a] = std::max(ext[a], f[c].extent()[a]);
    }
  }
  return ext;
}

Eigen::MatrixXd coefficient_matrix(const std::vector<PolyField>& fields, const MultiIndex& ext) {
  const int per_comp = ext[0] * ext[1] * ext[2];
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * per_comp, static_cast<Eigen::Index>(fields.size()));
  for (std::size_t j = 0; j < fields.size(); ++j) {
    for (int c = 0; c < 3; ++c) {
      fields[j][c].for_each_term([&](const MultiIndex& e, double v) {
        m(c * per_comp + e[0] + ext[0] * (e[1] + ext[1] * e[2]), static_cast<Eigen::Index>(j)) = v;
      });
    }
  }
  return m;
}

int scaling_power_of(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::WK:
    case SpaceTag::WM:
      return 2;
    case SpaceTag::Q1K:
      return 0;
    default:
      return 1;
  }
}

}  // namespace

std::string to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::WK: return "W_K";
    case SpaceTag::VK: return "V_K";
    case SpaceTag::NedelecK: return "Nedelec_K";
    case SpaceTag::Q1K: return "Q1_K";
    case SpaceTag::VM: return "V_M";
    case SpaceTag::WM: return "W_M";
  }
  return "?";
}

double DofFunctional::apply(const PolyField& v, const PolyField& curl_v) const {
  switch (kind) {
    case DofKind::FaceTangentialCurl:
      return curl_v[axis].integrate(region);
    case DofKind::VertexValue:
      return v[0].evaluate(region.lo);
    default:
      return v[axis].integrate(region);
  }
}

double DofFunctional::apply(const PolyField& v) const {
  if (kind == DofKind::FaceTangentialCurl) return apply(v, v.curl());
  return apply(v, PolyField{});
}

Eigen::MatrixXd ElementSpace::dof_matrix(const std::vector<PolyField>& fields) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dofs.size()), static_cast<Eigen::Index>(fields.size()));
  for (std::size_t j = 0; j < fields.size(); ++j) {
    const PolyField c = fields[j].curl();
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dofs[i].apply(fields[j], c);
    }
  }
  return m;
}

Eigen::VectorXd ElementSpace::apply_dofs(const PolyField& v) const { return dof_matrix({v}).col(0); }

PolyField ElementSpace::combine(std::span<const double> coeffs) const {
  PolyField out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0.0) out += coeffs[j] * dual[j];
  }
  return out;
}

double ElementSpace::duality_defect() const {
  const Eigen::MatrixXd d = dof_matrix(dual);
  return (d - Eigen::MatrixXd::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff();
}

std::vector<PolyField> span_WK() {
  std::vector<PolyField> out;
  for (int c = 0; c < 3; ++c) {
    out.push_back(PolyField::along(c, Polynomial::constant(1.0)));
    for (int a = 0; a < 3; ++a) out.push_back(PolyField::along(c, Polynomial::coordinate(a)));
    for (int o : other_axes(c)) {
      MultiIndex e{0, 0, 0};
      e[o] = 2;
      out.push_back(PolyField::along(c, Polynomial::monomial(e)));
    }
  }
  return out;
}

std::vector<PolyField> span_VK(const SpaceOptions& options) {
  std::vector<PolyField> out;
  // grad Q1 without the constants.
  for (const MultiIndex e : {MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}, MultiIndex{0, 0, 1}, MultiIndex{1, 1, 0},
                             MultiIndex{1, 0, 1}, MultiIndex{0, 1, 1}, MultiIndex{1, 1, 1}}) {
    out.push_back(PolyField::gradient(Polynomial::monomial(e)));
  }
  std::vector<PolyField> crosses;
  for (const auto& w : span_WK()) crosses.push_back(w.cross_from_left({0.0, 0.0, 0.0}));

  // x x W_K has a one-dimensional kernel (w parallel to x); keep the pivot columns.
  const Eigen::MatrixXd m = coefficient_matrix(crosses, common_extent(crosses));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  if (qr.rank() != 17) {
    throw DegenerateSpan("(x - x_K) x W_K has rank " + std::to_string(qr.rank()) + ", expected 17");
  }
  std::vector<int> keep;
  for (int j = 0; j < 17; ++j) keep.push_back(qr.colsPermutation().indices()(j));
  std::sort(keep.begin(), keep.end());
  bool perturbed = false;
  for (int j : keep) {
    PolyField f = crosses[j];
    if (!perturbed && options.vk_perturbation != 0.0) {
      f[0] += Polynomial::monomial({1, 1, 1}, options.vk_perturbation);
      perturbed = true;
    }
    out.push_back(std::move(f));
  }
  const int rank = numerical_rank(out);
  if (rank != 24) throw DegenerateSpan("V_K spanning set has rank " + std::to_string(rank) + ", expected 24");
  return out;
}

std::vector<PolyField> span_nedelec() { return anisotropic_tensor_span(0, 1); }

std::vector<PolyField> span_Q1() {
  std::vector<PolyField> out;
  for (int v = 0; v < 8; ++v) out.push_back(PolyField::along(0, mono(v & 1, (v >> 1) & 1, (v >> 2) & 1)));
  return out;
}

std::vector<PolyField> span_VM() { return anisotropic_tensor_span(2, 3); }

std::vector<PolyField> span_WM() { return anisotropic_tensor_span(3, 2); }

std::vector<DofFunctional> dofs_for(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::WK: return wk_dofs();
    case SpaceTag::VK: return vk_dofs();
    case SpaceTag::NedelecK: return cell_edge_dofs();
    case SpaceTag::Q1K: return q1_dofs();
    case SpaceTag::VM: return vm_dofs();
    case SpaceTag::WM: return wm_dofs();
  }
  return {};
}

void dual_basis(ElementSpace& space) {
  space.vandermonde = space.dof_matrix(space.span);
  if (space.vandermonde.rows() != space.vandermonde.cols()) {
    throw SingularVandermonde(to_string(space.tag) + ": " + std::to_string(space.vandermonde.rows()) +
                              " DoFs for " + std::to_string(space.vandermonde.cols()) + " shape functions");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(space.vandermonde);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  space.condition_number = smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
  if (!(space.condition_number < 1e12)) {
    throw SingularVandermonde(to_string(space.tag) + ": Vandermonde condition number " +
                              std::to_string(space.condition_number));
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(space.vandermonde);
  space.dual_coefficients = lu.inverse();
  space.dual.assign(space.span.size(), PolyField{});
  for (Eigen::Index j = 0; j < space.dual_coefficients.cols(); ++j) {
    for (Eigen::Index k = 0; k < space.dual_coefficients.rows(); ++k) {
      const double c = space.dual_coefficients(k, j);
      if (c != 0.0) space.dual[j] += c * space.span[k];
    }
  }
}

ElementSpace build_space(SpaceTag tag, const SpaceOptions& options) {
  ElementSpace space;
  space.tag = tag;
  space.scaling_power = scaling_power_of(tag);
  switch (tag) {
    case SpaceTag::WK: space.span = span_WK(); break;
    case SpaceTag::VK: space.span = span_VK(options); break;
    case SpaceTag::NedelecK: space.span = span_nedelec(); break;
    case SpaceTag::Q1K: space.span = span_Q1(); break;
    case SpaceTag::VM: space.span = span_VM(); break;
    case SpaceTag::WM: space.span = span_WM(); break;
  }
  space.dofs = dofs_for(tag);
  dual_basis(space);
  return space;
}

int numerical_rank(const std::vector<PolyField>& fields, double rel_tol) {
  const Eigen::MatrixXd m = coefficient_matrix(fields, common_extent(fields));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(rel_tol);
  return static_cast<int>(qr.rank());
}

double curl_inclusion_residual(const ElementSpace& v_space, const ElementSpace& w_space) {
  std::vector<PolyField> curls;
  for (const auto& d : v_space.dual) curls.push_back(d.curl());
  std::vector<PolyField> all = w_space.span;
  all.insert(all.end(), curls.begin(), curls.end());
  const MultiIndex ext = common_extent(all);
  const Eigen::MatrixXd w = coefficient_matrix(w_space.span, ext);
  const Eigen::MatrixXd b = coefficient_matrix(curls, ext);
  const Eigen::MatrixXd x = w.colPivHouseholderQr().solve(b);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    const double scale = std::max(1.0, b.col(j).cwiseAbs().maxCoeff());
    worst = std::max(worst, (w * x.col(j) - b.col(j)).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

bool check_curl_inclusion(const ElementSpace& v_space, const ElementSpace& w_space, double tol) {
  return curl_inclusion_residual(v_space, w_space) <= tol;
}

SpaceLibrary SpaceLibrary::build(const SpaceOptions& options) {
  SpaceLibrary lib;
  lib.wk = build_space(SpaceTag::WK, options);
  lib.vk = build_space(SpaceTag::VK, options);
  lib.nedelec = build_space(SpaceTag::NedelecK, options);
  lib.q1 = build_space(SpaceTag::Q1K, options);
  lib.vm = build_space(SpaceTag::VM, options);
  lib.wm = build_space(SpaceTag::WM, options);
  return lib;
}

const ElementSpace& SpaceLibrary::get(SpaceTag tag) const {
  switch (tag) {
    case SpaceTag::WK: return wk;
    case SpaceTag::VK: return vk;
    case SpaceTag::NedelecK: return nedelec;
    case SpaceTag::Q1K: return q1;
    case SpaceTag::VM: return vm;
    case SpaceTag::WM: return wm;
  }
  return vk;
}

const SpaceLibrary& reference_spaces() {
  static const SpaceLibrary lib = SpaceLibrary::build();
  return lib;
}

}  // namespace qcurl
