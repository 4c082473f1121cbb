#include <cstdio>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "qcurl/interp.hpp"
#include "qcurl/mms.hpp"
#include "qcurl/quadrature.hpp"
#include "qcurl/system.hpp"

using namespace qcurl;

namespace {

const AxisBox kCell{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};

const SpaceLibrary& lib() { return reference_spaces(); }

Eigen::VectorXd random_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <std::size_t N>
std::vector<double> gather(const std::array<int, N>& map, const Eigen::VectorXd& v, std::size_t count = N) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = map[i] < 0 ? 0.0 : v[map[i]];
  return out;
}

VectorFunction source() {
  return [](const Vec3& x) { return manufactured_solution().f(x); };
}

}  // namespace

TEST(System, ReferenceMatricesSymmetric) {
  const ReferenceMatrices ref = ReferenceMatrices::build(lib());
  EXPECT_LT((ref.mass - ref.mass.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((ref.grad_curl - ref.grad_curl.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ref.mass).eigenvalues().minCoeff(), 0.0);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ref.grad_curl).eigenvalues().minCoeff(), -1e-10);
}

TEST(System, QuadraticFormsMatchQuadrature) {
  const BrickMesh mesh(3);
  const GlobalDofMap dofs(mesh);
  const ReferenceMatrices ref = ReferenceMatrices::build(lib());
  const SparseMatrix a = assemble_A(dofs, ref);
  const SparseMatrix b = assemble_B(dofs, ref);
  const Eigen::VectorXd v = random_vector(dofs.num_velocity(), 1);
  const Eigen::VectorXd q = random_vector(dofs.num_pressure(), 2);
  const double h = mesh.h();
  const auto rule = tensor_rule(GaussRule(5), kCell);
  double energy = 0.0;
  double coupling = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const PolyField vf = field_from_dofs(lib().vk, gather(dofs.cell_velocity_dofs(c), v), h);
    const auto gc = vf.curl().jacobian();
    const PolyField qf = lib().q1.combine(gather(dofs.cell_pressure_dofs(c), q));
    const PolyField gq = PolyField::gradient(qf[0]);
    for (const QuadPoint& p : rule) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        const Vec3 row = gc[i].evaluate(p.x);
        s += dot(row, row);
      }
      energy += p.w * h * h * h * s / (h * h * h * h);
      coupling += p.w * h * h * h * dot(vf.evaluate(p.x), gq.evaluate(p.x)) / h;
    }
  }
  EXPECT_NEAR(v.dot(a * v), energy, 1e-10 * energy);
  EXPECT_NEAR(v.dot(b * q), coupling, 1e-10 * std::abs(coupling) + 1e-12);
}

TEST(System, DiscreteGradientsSpanKernelOfA) {
  const BrickMesh mesh(4);
  const GlobalDofMap dofs(mesh);
  const ReferenceMatrices ref = ReferenceMatrices::build(lib());
  const SparseMatrix a = assemble_A(dofs, ref);
  const Eigen::VectorXd q = random_vector(mesh.num_vertices(), 3);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dofs.num_velocity());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (dofs.edge_dof(e) < 0) continue;
    const auto [axis, l] = mesh.edge_lattice(e);
    Lattice end = l;
    end[axis] += 1;
    auto value = [&](const Lattice& v) {
      const int idx = mesh.vertex_index(v);
      return mesh.vertex_on_boundary(idx) ? 0.0 : q[idx];
    };
    g[dofs.edge_dof(e)] = value(end) - value(l);
  }
  EXPECT_LT((a * g).norm(), 1e-10 * a.norm() * g.norm());
}

TEST(System, SchemesShareMatricesButNotRhs) {
  const GlobalDofMap dofs{BrickMesh(6)};
  const SaddleSystem o = build_system(dofs, lib(), source(), Scheme::Original);
  const SaddleSystem m = build_system(dofs, lib(), source(), Scheme::Modified);
  EXPECT_EQ((SparseMatrix(o.A - m.A)).norm(), 0.0);
  EXPECT_EQ((SparseMatrix(o.B - m.B)).norm(), 0.0);
  EXPECT_GT((o.rhs_u - m.rhs_u).norm(), 1e-3 * o.rhs_u.norm());
  for (int i = dofs.num_edge_dofs(); i < dofs.num_velocity(); ++i) EXPECT_EQ(m.rhs_u[i], 0.0);
}

TEST(System, ParallelAssemblyMatchesSerial) {
  const GlobalDofMap dofs{BrickMesh(5)};
  const ReferenceMatrices ref = ReferenceMatrices::build(lib());
  const CellTabulation tab = CellTabulation::build(lib(), 4);
  EXPECT_EQ(SparseMatrix(assemble_A(dofs, ref) - reference::assemble_A(dofs, ref)).norm(), 0.0);
  EXPECT_EQ(SparseMatrix(assemble_B(dofs, ref) - reference::assemble_B(dofs, ref)).norm(), 0.0);
  for (Scheme s : {Scheme::Original, Scheme::Modified}) {
    EXPECT_EQ((assemble_rhs(dofs, tab, source(), s) - reference::assemble_rhs(dofs, tab, source(), s)).norm(), 0.0);
  }
}

TEST(System, RhsMatchesIndependentQuadrature) {
  const BrickMesh mesh(4);
  const GlobalDofMap dofs(mesh);
  const CellTabulation tab = CellTabulation::build(lib(), 6);
  const Eigen::VectorXd v = random_vector(dofs.num_velocity(), 4);
  const double h = mesh.h();
  for (Scheme s : {Scheme::Original, Scheme::Modified}) {
    const Eigen::VectorXd rhs = assemble_rhs(dofs, tab, source(), s);
    double expect = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
      const auto map = dofs.cell_velocity_dofs(c);
      const PolyField vf = s == Scheme::Original ? field_from_dofs(lib().vk, gather(map, v), h)
                                                 : field_from_dofs(lib().nedelec, gather(map, v, 12), h);
      const ElementFrame frame = ElementFrame::cell(mesh, c);
      for (const QuadPoint& p : tensor_rule(GaussRule(9), kCell)) {
        expect += p.w * h * h * h * dot(manufactured_solution().f(frame.to_physical(p.x)), vf.evaluate(p.x));
      }
    }
    EXPECT_NEAR(v.dot(rhs), expect, 1e-6 * std::abs(expect)) << to_string(s);
  }
}

TEST(System, SaddleBlocks) {
  const GlobalDofMap dofs{BrickMesh(3)};
  const SaddleSystem sys = build_system(dofs, lib(), source(), Scheme::Modified);
  EXPECT_EQ(sys.num_velocity(), dofs.num_velocity());
  EXPECT_EQ(sys.num_pressure(), dofs.num_pressure());
  const SparseMatrix k = sys.full();
  EXPECT_EQ(k.rows(), sys.size());
  EXPECT_LT(SparseMatrix(k - SparseMatrix(k.transpose())).norm(), 1e-12 * k.norm());
  const Eigen::VectorXd r = sys.rhs();
  EXPECT_EQ(r.tail(sys.num_pressure()).norm(), 0.0);
}

TEST(System, ExportCoordinate) {
  const GlobalDofMap dofs{BrickMesh(2)};
  const SparseMatrix a = assemble_A(dofs, ReferenceMatrices::build(lib()));
  const std::string path = ::testing::TempDir() + "qcurl_a.txt";
  export_coordinate(a, path);
  std::ifstream in(path);
  long rows = 0, cols = 0, nnz = 0;
  in >> rows >> cols >> nnz;
  EXPECT_EQ(rows, a.rows());
  EXPECT_EQ(cols, a.cols());
  EXPECT_EQ(nnz, a.nonZeros());
  long count = 0;
  int i = 0, j = 0;
  double x = 0.0;
  while (in >> i >> j >> x) {
    EXPECT_DOUBLE_EQ(x, a.coeff(i, j));
    ++count;
  }
  EXPECT_EQ(count, nnz);
  std::remove(path.c_str());
}
