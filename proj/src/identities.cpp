#include "qcurl/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <lapacke.h>

#include "qcurl/interp.hpp"
#include "qcurl/mms.hpp"
#include "qcurl/solver.hpp"

namespace qcurl {

namespace {

const AxisBox kCell{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};

AxisBox reference_face(int axis, int side) {
  AxisBox box = kCell;
  box.lo[axis] = box.hi[axis] = -0.5 + side;
  return box;
}

Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Polynomial p;
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; b <= degree; ++b) {
      for (int c = 0; c <= degree; ++c) p.add_term({a, b, c}, coeff(rng));
    }
  }
  return p;
}

double relative_gap(const PolyField& a, const PolyField& b) {
  return (a - b).max_abs_coefficient() / std::max(1.0, a.max_abs_coefficient());
}

/// [P_degree]^3 spanned by monomials of total degree <= degree.
std::vector<PolyField> vector_monomials(int degree) {
  std::vector<PolyField> out;
  for (int comp = 0; comp < 3; ++comp) {
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) {
        for (int c = 0; a + b + c <= degree; ++c) out.push_back(PolyField::along(comp, Polynomial::monomial({a, b, c})));
      }
    }
  }
  return out;
}

PolyField cell_field(const ElementSpace& space, const std::vector<int>& global, const Eigen::VectorXd& values,
                     double h) {
  std::vector<double> d(global.size(), 0.0);
  for (std::size_t i = 0; i < global.size(); ++i) d[i] = global[i] < 0 ? 0.0 : values[global[i]];
  return field_from_dofs(space, d, h);
}

template <std::size_t N>
std::vector<int> as_vector(const std::array<int, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace

double commuting_defect_cell(const SpaceLibrary& lib, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ElementFrame frame{{0.3, 0.45, 0.6}, 0.2};
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const PolyField v(random_polynomial(rng, 3), random_polynomial(rng, 3), random_polynomial(rng, 3));
    const PolynomialField pv(v);
    const PolynomialField pw(v.curl());
    const LocalInterpolant pi = interp_PiK(pw, frame, lib, {true, 6});
    const LocalInterpolant iv = interp_IK(pv, frame, lib, {true, 6});
    worst = std::max(worst, relative_gap(pi.field, (1.0 / frame.size) * iv.field.curl()));
  }
  return worst;
}

double commuting_defect_macro(const SpaceLibrary& lib, int trials, std::uint64_t seed) {
  const BrickMesh mesh(9);
  const GlobalDofMap dofs(mesh);
  const MacroPartition part = macro_partition(mesh);
  const auto it = std::find_if(part.macros.begin(), part.macros.end(),
                               [](const Macroelement& m) { return m.origin == Lattice{3, 3, 3}; });
  const Macroelement& macro = *it;
  const ElementFrame frame = ElementFrame::macro(mesh, macro);
  const double h = mesh.h();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd vh(dofs.num_velocity());
    for (auto& x : vh) x = coeff(rng);
    std::array<double, 144> edge{};
    for (int i = 0; i < 144; ++i) edge[i] = vh[dofs.edge_dof(macro.edges[i])];
    const PolyField im = field_from_dofs(lib.vm, edge, frame.size);

    std::array<double, 108> face{};
    for (int i = 0; i < 108; ++i) {
      const auto [axis, l] = mesh.face_lattice(macro.faces[i]);
      // Flux from both neighbours; curl_h v_h has single-valued normal face integrals.
      double flux[2] = {0.0, 0.0};
      for (int side = 0; side < 2; ++side) {
        Lattice c = l;
        c[axis] -= 1 - side;
        const int cell = mesh.cell_index(c);
        const PolyField curl_ref = cell_field(lib.vk, as_vector(dofs.cell_velocity_dofs(cell)), vh, h).curl();
        flux[side] = h * curl_ref[axis].integrate(reference_face(axis, 1 - side));
      }
      worst = std::max(worst, std::abs(flux[0] - flux[1]));
      face[i] = flux[0];
    }
    const PolyField pm = field_from_dofs(lib.wm, face, frame.size);
    worst = std::max(worst, relative_gap(pm, (1.0 / frame.size) * im.curl()));
  }
  return worst;
}

double orthogonality_defect_wk(const SpaceLibrary& lib) {
  double worst = 0.0;
  for (const PolyField& w : vector_monomials(2)) {
    const Eigen::VectorXd d = reference_dofs(lib.wk, w, true);
    const PolyField pi = lib.wk.combine({d.data(), static_cast<std::size_t>(d.size())});
    for (const PolyField& wh : lib.wk.span) worst = std::max(worst, std::abs(integrate_grad_dot(w - pi, wh, kCell)));
  }
  return worst;
}

double orthogonality_defect_vk(const SpaceLibrary& lib) {
  double worst = 0.0;
  for (const PolyField& v : vector_monomials(1)) {
    const Eigen::VectorXd d = reference_dofs(lib.vk, v, false);
    const PolyField i0 = lib.vk.combine({d.data(), static_cast<std::size_t>(d.size())});
    for (const PolyField& q : lib.q1.dual) {
      worst = std::max(worst, std::abs(integrate_dot(v - i0, PolyField::gradient(q[0]), kCell)));
    }
  }
  return worst;
}

double nedelec_curl_defect(const SpaceLibrary& lib) {
  double worst = 0.0;
  for (const PolyField& phi : lib.vk.dual) {
    const Eigen::VectorXd d = reference_dofs(lib.nedelec, phi, false);
    const PolyField ic = lib.nedelec.combine({d.data(), static_cast<std::size_t>(d.size())});
    const PolyField diff = (phi - ic).curl();
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(diff[c].integrate(kCell)));
  }
  return worst;
}

double jump_defect(const SpaceLibrary& lib, int n, std::uint64_t seed) {
  const BrickMesh mesh(n);
  const GlobalDofMap dofs(mesh);
  const double h = mesh.h();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Eigen::VectorXd w(dofs.num_w());
  for (auto& x : w) x = coeff(rng);
  std::vector<PolyField> cells(mesh.num_cells());
  for (int c = 0; c < mesh.num_cells(); ++c) cells[c] = cell_field(lib.wk, as_vector(dofs.cell_w_dofs(c)), w, h);
  double worst = 0.0;
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (mesh.face_on_boundary(f)) continue;
    const auto [axis, l] = mesh.face_lattice(f);
    Lattice lower = l;
    lower[axis] -= 1;
    const PolyField& minus = cells[mesh.cell_index(lower)];
    const PolyField& plus = cells[mesh.cell_index(l)];
    for (int comp = 0; comp < 3; ++comp) {
      const double jump =
          minus[comp].integrate(reference_face(axis, 1)) - plus[comp].integrate(reference_face(axis, 0));
      worst = std::max(worst, h * h * std::abs(jump));
    }
  }
  return worst;
}

double mixed_monomial_defect(const SpaceLibrary& lib) {
  double worst = 0.0;
  auto scan = [&](const std::vector<PolyField>& fields) {
    for (const PolyField& f : fields) {
      for (int c = 0; c < 3; ++c) {
        f[c].for_each_term([&](const MultiIndex& e, double v) {
          const int active = (e[0] > 0) + (e[1] > 0) + (e[2] > 0);
          if (active > 1) worst = std::max(worst, std::abs(v));
        });
      }
    }
  };
  scan(lib.wk.span);
  scan(lib.wk.dual);
  return worst;
}

double i3h_consistency_defect(const SpaceLibrary& lib, int n, int quad_order) {
  const GlobalDofMap dofs{BrickMesh(n)};
  const ExactFields& u = manufactured_solution();
  const MacroField a = global_I3h(global_Ih(u, dofs, {true, quad_order}), dofs, lib);
  const MacroField b = global_I3h(u, dofs, lib, quad_order);
  double worst = 0.0;
  for (std::size_t m = 0; m < a.fields.size(); ++m) worst = std::max(worst, relative_gap(b.fields[m], a.fields[m]));
  return worst;
}

DenseOracleResult dense_oracle(const SpaceLibrary& lib, int n, Scheme scheme, double tol) {
  const GlobalDofMap dofs{BrickMesh(n)};
  const ExactFields& u = manufactured_solution();
  const SaddleSystem system = build_system(dofs, lib, [&u](const Vec3& x) { return u.f(x); }, scheme);
  SolveOptions options;
  options.kind = SolverKind::Minres;
  options.tol = tol;
  const SolveResult iterative = solve_saddle(system, options);

  const lapack_int size = system.size();
  Eigen::MatrixXd k(system.full());
  Eigen::VectorXd z = system.rhs();
  std::vector<lapack_int> pivots(size);
  const lapack_int info = LAPACKE_dsysv(LAPACK_COL_MAJOR, 'U', size, 1, k.data(), size, pivots.data(), z.data(), size);
  if (info != 0) throw SingularSystem("dense symmetric-indefinite factorization failed, info=" + std::to_string(info));

  DenseOracleResult r;
  Eigen::VectorXd zi(size);
  zi << iterative.u.values, iterative.p.values;
  r.max_coefficient_diff = (zi - z).lpNorm<Eigen::Infinity>();
  r.pressure_max = iterative.p.values.size() ? iterative.p.values.lpNorm<Eigen::Infinity>() : 0.0;
  r.relative_residual = iterative.relative_residual;
  return r;
}

}  // namespace qcurl
