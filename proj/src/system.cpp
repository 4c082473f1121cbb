#include "qcurl/system.hpp"

#include <cmath>
#include <fstream>

#include "qcurl/quadrature.hpp"

namespace qcurl {

namespace {

const AxisBox kReferenceCell{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};

using Triplet = Eigen::Triplet<double>;

template <int Rows, int Cols>
void cell_triplets(const Eigen::Matrix<double, Rows, Cols>& local, double scale, const std::array<int, Rows>& rows,
                   const std::array<int, Cols>& cols, Triplet* out) {
  for (int i = 0; i < Rows; ++i) {
    for (int j = 0; j < Cols; ++j) {
      *out++ = (rows[i] < 0 || cols[j] < 0) ? Triplet(-1, -1, 0.0) : Triplet(rows[i], cols[j], scale * local(i, j));
    }
  }
}

SparseMatrix from_slots(std::vector<Triplet>& slots, int rows, int cols) {
  std::size_t k = 0;
  for (const Triplet& t : slots) {
    if (t.row() >= 0) slots[k++] = t;
  }
  slots.resize(k);
  SparseMatrix m(rows, cols);
  m.setFromTriplets(slots.begin(), slots.end());
  return m;
}

void local_rhs(const GlobalDofMap& dofs, const CellTabulation& tab, const VectorFunction& f, Scheme scheme, int cell,
               double* out) {
  const BrickMesh& mesh = dofs.mesh();
  const double h = mesh.h();
  const Vec3 c = mesh.cell_center(cell);
  // phi = phi_ref / h, dx = h^3 dx_ref
  const double scale = h * h;
  for (int i = 0; i < 24; ++i) out[i] = 0.0;
  for (int q = 0; q < tab.num_points(); ++q) {
    const Vec3 fx = f(c + h * tab.points[q]);
    const double w = scale * tab.weights[q];
    if (scheme == Scheme::Original) {
      for (int i = 0; i < 24; ++i) out[i] += w * dot(fx, tab.vk_value[q][i]);
    } else {
      for (int i = 0; i < 12; ++i) out[i] += w * dot(fx, tab.nedelec_value[q][i]);
    }
  }
}

Eigen::VectorXd scatter_rhs(const GlobalDofMap& dofs, const std::vector<double>& local) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dofs.num_velocity());
  const int nc = dofs.mesh().num_cells();
  for (int c = 0; c < nc; ++c) {
    const auto g = dofs.cell_velocity_dofs(c);
    for (int i = 0; i < 24; ++i) {
      if (g[i] >= 0) rhs[g[i]] += local[24 * c + i];
    }
  }
  return rhs;
}

}  // namespace

std::string to_string(Scheme scheme) { return scheme == Scheme::Original ? "original" : "modified"; }

ReferenceMatrices ReferenceMatrices::build(const SpaceLibrary& lib) {
  ReferenceMatrices r;
  const auto& phi = lib.vk.dual;
  std::vector<PolyField> curls;
  for (const auto& p : phi) curls.push_back(p.curl());
  std::vector<PolyField> grads;
  for (const auto& psi : lib.q1.dual) grads.push_back(PolyField::gradient(psi[0]));
  for (int i = 0; i < 24; ++i) {
    for (int j = 0; j < 24; ++j) {
      r.mass(i, j) = integrate_dot(phi[i], phi[j], kReferenceCell);
      r.curl_mass(i, j) = integrate_dot(curls[i], curls[j], kReferenceCell);
      r.grad_curl(i, j) = integrate_grad_dot(curls[i], curls[j], kReferenceCell);
    }
    for (int m = 0; m < 8; ++m) r.grad_pressure(i, m) = integrate_dot(phi[i], grads[m], kReferenceCell);
  }
  return r;
}

CellTabulation CellTabulation::build(const SpaceLibrary& lib, int quad_order) {
  CellTabulation t;
  const auto rule = tensor_rule(GaussRule(quad_order), kReferenceCell);
  std::array<PolyField, 24> curls;
  std::array<std::array<PolyField, 3>, 24> grad_curls;
  for (int i = 0; i < 24; ++i) {
    curls[i] = lib.vk.dual[i].curl();
    grad_curls[i] = curls[i].jacobian();
  }
  for (const auto& qp : rule) {
    t.points.push_back(qp.x);
    t.weights.push_back(qp.w);
    std::array<Vec3, 24> v{}, c{};
    std::array<Mat3, 24> g{};
    for (int i = 0; i < 24; ++i) {
      v[i] = lib.vk.dual[i].evaluate(qp.x);
      c[i] = curls[i].evaluate(qp.x);
      for (int r = 0; r < 3; ++r) g[i][r] = grad_curls[i][r].evaluate(qp.x);
    }
    std::array<Vec3, 12> ned{};
    for (int i = 0; i < 12; ++i) ned[i] = lib.nedelec.dual[i].evaluate(qp.x);
    t.vk_value.push_back(v);
    t.vk_curl.push_back(c);
    t.vk_grad_curl.push_back(g);
    t.nedelec_value.push_back(ned);
  }
  return t;
}

SparseMatrix assemble_A(const GlobalDofMap& dofs, const ReferenceMatrices& ref) {
  const int nc = dofs.mesh().num_cells();
  const double scale = std::pow(dofs.mesh().h(), -3);
  std::vector<Triplet> slots(static_cast<std::size_t>(nc) * 576);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) {
    const auto g = dofs.cell_velocity_dofs(c);
    cell_triplets<24, 24>(ref.grad_curl, scale, g, g, slots.data() + 576 * static_cast<std::size_t>(c));
  }
  return from_slots(slots, dofs.num_velocity(), dofs.num_velocity());
}

SparseMatrix assemble_B(const GlobalDofMap& dofs, const ReferenceMatrices& ref) {
  const int nc = dofs.mesh().num_cells();
  const double scale = dofs.mesh().h();
  std::vector<Triplet> slots(static_cast<std::size_t>(nc) * 192);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) {
    cell_triplets<24, 8>(ref.grad_pressure, scale, dofs.cell_velocity_dofs(c), dofs.cell_pressure_dofs(c),
                         slots.data() + 192 * static_cast<std::size_t>(c));
  }
  return from_slots(slots, dofs.num_velocity(), dofs.num_pressure());
}

Eigen::VectorXd assemble_rhs(const GlobalDofMap& dofs, const CellTabulation& tab, const VectorFunction& f,
                             Scheme scheme) {
  const int nc = dofs.mesh().num_cells();
  std::vector<double> local(static_cast<std::size_t>(nc) * 24);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nc; ++c) local_rhs(dofs, tab, f, scheme, c, local.data() + 24 * static_cast<std::size_t>(c));
  return scatter_rhs(dofs, local);
}

SparseMatrix reference::assemble_A(const GlobalDofMap& dofs, const ReferenceMatrices& ref) {
  const int nc = dofs.mesh().num_cells();
  const double scale = std::pow(dofs.mesh().h(), -3);
  std::vector<Triplet> slots(static_cast<std::size_t>(nc) * 576);
  for (int c = 0; c < nc; ++c) {
    const auto g = dofs.cell_velocity_dofs(c);
    cell_triplets<24, 24>(ref.grad_curl, scale, g, g, slots.data() + 576 * static_cast<std::size_t>(c));
  }
  return from_slots(slots, dofs.num_velocity(), dofs.num_velocity());
}

SparseMatrix reference::assemble_B(const GlobalDofMap& dofs, const ReferenceMatrices& ref) {
  const int nc = dofs.mesh().num_cells();
  const double scale = dofs.mesh().h();
  std::vector<Triplet> slots(static_cast<std::size_t>(nc) * 192);
  for (int c = 0; c < nc; ++c) {
    cell_triplets<24, 8>(ref.grad_pressure, scale, dofs.cell_velocity_dofs(c), dofs.cell_pressure_dofs(c),
                         slots.data() + 192 * static_cast<std::size_t>(c));
  }
  return from_slots(slots, dofs.num_velocity(), dofs.num_pressure());
}

Eigen::VectorXd reference::assemble_rhs(const GlobalDofMap& dofs, const CellTabulation& tab, const VectorFunction& f,
                                        Scheme scheme) {
  const int nc = dofs.mesh().num_cells();
  std::vector<double> local(static_cast<std::size_t>(nc) * 24);
  for (int c = 0; c < nc; ++c) local_rhs(dofs, tab, f, scheme, c, local.data() + 24 * static_cast<std::size_t>(c));
  return scatter_rhs(dofs, local);
}

SparseMatrix SaddleSystem::full() const {
  const int nu = num_velocity();
  std::vector<Triplet> t;
  t.reserve(A.nonZeros() + 2 * B.nonZeros());
  for (int k = 0; k < A.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(A, k); it; ++it) t.emplace_back(it.row(), it.col(), it.value());
  }
  for (int k = 0; k < B.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(B, k); it; ++it) {
      t.emplace_back(it.row(), nu + it.col(), it.value());
      t.emplace_back(nu + it.col(), it.row(), it.value());
    }
  }
  SparseMatrix k(size(), size());
  k.setFromTriplets(t.begin(), t.end());
  return k;
}

Eigen::VectorXd SaddleSystem::rhs() const {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(size());
  b.head(num_velocity()) = rhs_u;
  return b;
}

SaddleSystem build_system(const GlobalDofMap& dofs, const SpaceLibrary& lib, const VectorFunction& f, Scheme scheme,
                          int quad_order) {
  const ReferenceMatrices ref = ReferenceMatrices::build(lib);
  const CellTabulation tab = CellTabulation::build(lib, quad_order);
  return {assemble_A(dofs, ref), assemble_B(dofs, ref), assemble_rhs(dofs, tab, f, scheme)};
}

void export_coordinate(const SparseMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path);
  out.precision(17);
  out << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
  }
}

}  // namespace qcurl
