#include "qcurl/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qcurl {

namespace {

using Sums = std::array<double, 3>;

double frobenius2(const Mat3& m) {
  double s = 0.0;
  for (const auto& row : m) s += dot(row, row);
  return s;
}

Sums cell_error(const DofVector& uh, const GlobalDofMap& dofs, const CellTabulation& tab, const FieldSampler& exact,
                int cell) {
  const BrickMesh& mesh = dofs.mesh();
  const double h = mesh.h();
  const Vec3 center = mesh.cell_center(cell);
  const auto g = dofs.cell_velocity_dofs(cell);
  std::array<double, 24> d{};
  for (int i = 0; i < 24; ++i) d[i] = uh[g[i]];
  const double s1 = 1.0 / h, s2 = s1 * s1, s3 = s2 * s1;
  Sums out{0.0, 0.0, 0.0};
  for (int q = 0; q < tab.num_points(); ++q) {
    ExactFields::Sample e = exact(center + h * tab.points[q]);
    for (int i = 0; i < 24; ++i) {
      if (d[i] == 0.0) continue;
      e.u = e.u - (d[i] * s1) * tab.vk_value[q][i];
      e.curl = e.curl - (d[i] * s2) * tab.vk_curl[q][i];
      for (int r = 0; r < 3; ++r) e.grad_curl[r] = e.grad_curl[r] - (d[i] * s3) * tab.vk_grad_curl[q][i][r];
    }
    const double w = tab.weights[q] * h * h * h;
    out[0] += w * frobenius2(e.grad_curl);
    out[1] += w * dot(e.curl, e.curl);
    out[2] += w * dot(e.u, e.u);
  }
  return out;
}

struct MacroCache {
  PolyField value;
  PolyField curl;
  std::array<PolyField, 3> grad_curl;
};

Sums macro_cell_error(const MacroField& field, const std::vector<MacroCache>& cache, int macro,
                      const GlobalDofMap& dofs, const CellTabulation& tab, const FieldSampler& exact, int cell) {
  const BrickMesh& mesh = dofs.mesh();
  const double h = mesh.h();
  const Vec3 center = mesh.cell_center(cell);
  const ElementFrame& frame = field.frames[macro];
  const MacroCache& mc = cache[macro];
  const double inv = 1.0 / frame.size;
  Sums out{0.0, 0.0, 0.0};
  for (int q = 0; q < tab.num_points(); ++q) {
    const Vec3 x = center + h * tab.points[q];
    const Vec3 xr = frame.to_reference(x);
    ExactFields::Sample e = exact(x);
    e.u = e.u - mc.value.evaluate(xr);
    e.curl = e.curl - inv * mc.curl.evaluate(xr);
    for (int r = 0; r < 3; ++r) e.grad_curl[r] = e.grad_curl[r] - (inv * inv) * mc.grad_curl[r].evaluate(xr);
    const double w = tab.weights[q] * h * h * h;
    out[0] += w * frobenius2(e.grad_curl);
    out[1] += w * dot(e.curl, e.curl);
    out[2] += w * dot(e.u, e.u);
  }
  return out;
}

ErrorTriple finish(const std::vector<Sums>& per_cell) {
  Sums total{0.0, 0.0, 0.0};
  for (const auto& s : per_cell) {
    for (int k = 0; k < 3; ++k) total[k] += s[k];
  }
  return {std::sqrt(total[0]), std::sqrt(total[1]), std::sqrt(total[2])};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3E", v);
  return buf;
}

}  // namespace

FieldSampler sampler(const ExactFields& exact) {
  return [&exact](const Vec3& x) { return exact.sample(x); };
}

FieldSampler zero_sampler() {
  return [](const Vec3&) { return ExactFields::Sample{}; };
}

ErrorTriple error_vs_exact(const DofVector& uh, const GlobalDofMap& dofs, const CellTabulation& tab,
                           const FieldSampler& exact) {
  const int nc = dofs.mesh().num_cells();
  std::vector<Sums> per_cell(nc);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) per_cell[c] = cell_error(uh, dofs, tab, exact, c);
  return finish(per_cell);
}

ErrorTriple reference::error_vs_exact(const DofVector& uh, const GlobalDofMap& dofs, const CellTabulation& tab,
                                      const FieldSampler& exact) {
  const int nc = dofs.mesh().num_cells();
  std::vector<Sums> per_cell(nc);
  for (int c = 0; c < nc; ++c) per_cell[c] = cell_error(uh, dofs, tab, exact, c);
  return finish(per_cell);
}

ErrorTriple error_vs_exact(const MacroField& field, const GlobalDofMap& dofs, const CellTabulation& tab,
                           const FieldSampler& exact) {
  const int nm = static_cast<int>(field.fields.size());
  std::vector<MacroCache> cache(nm);
  std::vector<int> macro_of(dofs.mesh().num_cells(), -1);
  for (int m = 0; m < nm; ++m) {
    cache[m].value = field.fields[m];
    cache[m].curl = field.fields[m].curl();
    cache[m].grad_curl = cache[m].curl.jacobian();
    for (int c : field.partition.macros[m].cells) macro_of[c] = m;
  }
  const int nc = dofs.mesh().num_cells();
  std::vector<Sums> per_cell(nc);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) per_cell[c] = macro_cell_error(field, cache, macro_of[c], dofs, tab, exact, c);
  return finish(per_cell);
}

ErrorTriple vh_norms(const DofVector& vh, const GlobalDofMap& dofs, const ReferenceMatrices& ref) {
  const BrickMesh& mesh = dofs.mesh();
  const double h = mesh.h();
  const int nc = mesh.num_cells();
  std::vector<Sums> per_cell(nc);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) {
    const auto g = dofs.cell_velocity_dofs(c);
    Eigen::Matrix<double, 24, 1> d;
    for (int i = 0; i < 24; ++i) d[i] = vh[g[i]];
    per_cell[c] = {d.dot(ref.grad_curl * d) / (h * h * h), d.dot(ref.curl_mass * d) / h, d.dot(ref.mass * d) * h};
  }
  Sums total{0.0, 0.0, 0.0};
  for (const auto& s : per_cell) {
    for (int k = 0; k < 3; ++k) total[k] += s[k];
  }
  // Round-off can leave tiny negative quadratic forms.
  return {std::sqrt(std::max(total[0], 0.0)), std::sqrt(std::max(total[1], 0.0)), std::sqrt(std::max(total[2], 0.0))};
}

ErrorTriple superclose_error(const DofVector& uh, const DofVector& ih_u, const GlobalDofMap& dofs,
                             const ReferenceMatrices& ref) {
  if (uh.size() != ih_u.size()) throw InvalidArgument("superclose_error: vector sizes differ");
  return vh_norms({DofTag::Velocity, ih_u.values - uh.values}, dofs, ref);
}

ErrorTriple superconvergent_error(const DofVector& uh, const GlobalDofMap& dofs, const SpaceLibrary& lib,
                                  const CellTabulation& tab, const FieldSampler& exact) {
  return error_vs_exact(global_I3h(uh, dofs, lib), dofs, tab, exact);
}

std::vector<std::array<double, 3>> compute_eoc(const std::vector<int>& n, const std::vector<ErrorTriple>& errors) {
  if (n.size() != errors.size()) throw InvalidArgument("compute_eoc: row count mismatch");
  std::vector<std::array<double, 3>> out(n.size(), {NAN, NAN, NAN});
  for (std::size_t r = 0; r < n.size(); ++r) {
    for (int k = 0; k < 3; ++k) {
      if (!(errors[r][k] > 0.0)) throw DegenerateError("non-positive error in row n=" + std::to_string(n[r]));
    }
    if (r == 0) continue;
    if (n[r] == n[r - 1]) throw DegenerateError("repeated n=" + std::to_string(n[r]));
    const double ratio = std::log(static_cast<double>(n[r]) / n[r - 1]);
    for (int k = 0; k < 3; ++k) out[r][k] = std::log(errors[r - 1][k] / errors[r][k]) / ratio;
  }
  return out;
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Errors: return "errors";
    case Quantity::Superclose: return "superclose";
    case Quantity::Superconv: return "superconv";
  }
  return "errors";
}

void ConvergenceReport::add(int n_value, const ErrorTriple& e) {
  n.push_back(n_value);
  errors.push_back(e);
}

std::vector<std::array<double, 3>> ConvergenceReport::eoc() const { return compute_eoc(n, errors); }

std::string ConvergenceReport::to_csv() const {
  const auto orders = eoc();
  std::ostringstream out;
  out << "n,err1,eoc1,err2,eoc2,err3,eoc3\n";
  char buf[64];
  for (std::size_t r = 0; r < n.size(); ++r) {
    out << n[r];
    for (int k = 0; k < 3; ++k) {
      std::snprintf(buf, sizeof buf, ",%.6e,", errors[r][k]);
      out << buf;
      if (r > 0) {
        std::snprintf(buf, sizeof buf, "%.4f", orders[r][k]);
        out << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string ConvergenceReport::to_markdown() const {
  static const char* kLabels[3][3] = {
      {"\\|curl_h(u-u_h)\\|_{1,h}", "\\|\\|curl_h(u-u_h)\\|\\|_0", "\\|\\|u-u_h\\|\\|_0"},
      {"\\|curl_h(I_h u-u_h)\\|_{1,h}", "\\|\\|curl_h(I_h u-u_h)\\|\\|_0", "\\|\\|I_h u-u_h\\|\\|_0"},
      {"\\|curl_h(u-I_3h u_h)\\|_{1,h}", "\\|\\|curl_h(u-I_3h u_h)\\|\\|_0", "\\|\\|u-I_3h u_h\\|\\|_0"},
  };
  const auto& labels = kLabels[static_cast<int>(quantity)];
  const auto orders = eoc();
  std::ostringstream out;
  out << "### " << to_string(scheme) << " scheme, " << to_string(quantity) << "\n\n";
  out << "| n | " << labels[0] << " | order | " << labels[1] << " | order | " << labels[2] << " | order |\n";
  out << "|---:|---:|---:|---:|---:|---:|---:|\n";
  char buf[32];
  for (std::size_t r = 0; r < n.size(); ++r) {
    out << "| " << n[r];
    for (int k = 0; k < 3; ++k) {
      out << " | " << format_number(errors[r][k]) << " | ";
      if (r > 0) {
        std::snprintf(buf, sizeof buf, "%.2f", orders[r][k]);
        out << buf;
      } else {
        out << "-";
      }
    }
    out << " |\n";
  }
  return out.str();
}

}  // namespace qcurl
