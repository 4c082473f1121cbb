#include "qcurl/solver.hpp"

#include <cmath>
#include <string>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>

namespace qcurl {

namespace {

void spmv_rows(const RowMatrix& k, const Eigen::VectorXd& x, Eigen::VectorXd& y, int row) {
  double s = 0.0;
  for (RowMatrix::InnerIterator it(k, row); it; ++it) s += it.value() * x[it.col()];
  y[row] = s;
}

SolveResult split(const SaddleSystem& system, const Eigen::VectorXd& z, double residual, int iterations) {
  SolveResult r;
  r.u = {DofTag::Velocity, z.head(system.num_velocity())};
  r.p = {DofTag::Pressure, z.tail(system.num_pressure())};
  r.relative_residual = residual;
  r.iterations = iterations;
  return r;
}

SolveResult solve_direct(const SaddleSystem& system, const RowMatrix& k, const Eigen::VectorXd& b,
                         const SolveOptions& options) {
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(system.full());
  if (lu.info() != Eigen::Success) throw SingularSystem("sparse LU factorization failed");
  Eigen::VectorXd z = lu.solve(b);
  if (lu.info() != Eigen::Success || !z.allFinite()) throw SingularSystem("sparse LU solve failed");
  const int max_steps = options.max_iterations > 0 ? options.max_iterations : 10;
  double res = relative_residual(k, z, b);
  int steps = 0;
  while (res > options.tol && steps < max_steps) {
    Eigen::VectorXd r(b.size());
    spmv(k, z, r);
    r = b - r;
    z += lu.solve(r);
    res = relative_residual(k, z, b);
    ++steps;
  }
  if (!(res <= options.tol)) throw MaxIterations("iterative refinement stagnated", res);
  return split(system, z, res, steps);
}

}  // namespace

std::string to_string(SolverKind kind) { return kind == SolverKind::Direct ? "direct" : "minres"; }

SolverKind solver_from_string(const std::string& name) {
  if (name == "direct") return SolverKind::Direct;
  if (name == "minres") return SolverKind::Minres;
  throw InvalidArgument("unknown solver '" + name + "'");
}

void spmv(const RowMatrix& k, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const int rows = static_cast<int>(k.rows());
  y.resize(rows);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < rows; ++i) spmv_rows(k, x, y, i);
}

void reference::spmv(const RowMatrix& k, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.resize(k.rows());
  for (int i = 0; i < k.rows(); ++i) spmv_rows(k, x, y, i);
}

double relative_residual(const RowMatrix& k, const Eigen::VectorXd& z, const Eigen::VectorXd& b) {
  Eigen::VectorXd r(b.size());
  spmv(k, z, r);
  const double nb = b.norm();
  return nb == 0.0 ? (r - b).norm() : (r - b).norm() / nb;
}

Eigen::VectorXd diagonal_preconditioner(const SaddleSystem& system) {
  const int nu = system.num_velocity();
  Eigen::VectorXd d(system.size());
  for (int i = 0; i < nu; ++i) {
    const double a = std::abs(system.A.coeff(i, i));
    d[i] = a > 0.0 ? a : 1.0;
  }
  for (int m = 0; m < system.num_pressure(); ++m) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(system.B, m); it; ++it) s += it.value() * it.value() / d[it.row()];
    d[nu + m] = s > 0.0 ? s : 1.0;
  }
  return d;
}

Eigen::VectorXd minres(const RowMatrix& k, const Eigen::VectorXd& b, const Eigen::VectorXd& inv_diag, double tol,
                       int max_iterations, int* iterations) {
  const Eigen::Index n = b.size();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (iterations) *iterations = 0;
  const double nb = b.norm();
  if (nb == 0.0) return x;

  Eigen::VectorXd v_prev = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = b;
  Eigen::VectorXd z = inv_diag.cwiseProduct(v);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd w_prev = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd az(n);
  double gamma = std::sqrt(z.dot(v));
  double gamma_prev = 1.0;
  double eta = gamma;
  double c = 1.0, c_prev = 1.0, s = 0.0, s_prev = 0.0;

  for (int j = 1; j <= max_iterations; ++j) {
    z /= gamma;
    spmv(k, z, az);
    const double delta = az.dot(z);
    Eigen::VectorXd v_next = az - (delta / gamma) * v - (gamma / gamma_prev) * v_prev;
    Eigen::VectorXd z_next = inv_diag.cwiseProduct(v_next);
    const double gg = z_next.dot(v_next);
    if (gg < 0.0) throw SingularSystem("MINRES breakdown: preconditioner is not positive definite");
    const double gamma_next = std::sqrt(gg);

    const double a0 = c * delta - c_prev * s * gamma;
    const double a1 = std::hypot(a0, gamma_next);
    const double a2 = s * delta + c_prev * c * gamma;
    const double a3 = s_prev * gamma;
    if (a1 == 0.0) throw SingularSystem("MINRES breakdown: singular tridiagonal factor");
    const double c_next = a0 / a1;
    const double s_next = gamma_next / a1;

    Eigen::VectorXd w_next = (z - a3 * w_prev - a2 * w) / a1;
    x += (c_next * eta) * w_next;
    eta = -s_next * eta;

    w_prev = std::move(w);
    w = std::move(w_next);
    v_prev = std::move(v);
    v = std::move(v_next);
    z = std::move(z_next);
    gamma_prev = gamma;
    gamma = gamma_next;
    c_prev = c;
    c = c_next;
    s_prev = s;
    s = s_next;
    if (iterations) *iterations = j;

    // |eta| tracks the preconditioned residual; confirm with the true one.
    if (std::abs(eta) <= tol * nb * 1e-2 || gamma == 0.0 || j % 50 == 0) {
      if (relative_residual(k, x, b) <= tol) return x;
      if (gamma == 0.0) break;
    }
  }
  const double res = relative_residual(k, x, b);
  if (res <= tol) return x;
  throw MaxIterations("MINRES did not reach the residual target", res);
}

SolveResult solve_saddle(const SaddleSystem& system, const SolveOptions& options) {
  const int n = system.size();
  if (n == 0) return split(system, Eigen::VectorXd(), 0.0, 0);
  const RowMatrix k = system.full();
  const Eigen::VectorXd b = system.rhs();
  if (b.norm() == 0.0) return split(system, Eigen::VectorXd::Zero(n), 0.0, 0);
  if (options.kind == SolverKind::Direct) return solve_direct(system, k, b, options);

  const Eigen::VectorXd inv_diag = diagonal_preconditioner(system).cwiseInverse();
  const int max_it = options.max_iterations > 0 ? options.max_iterations : 10 * n;
  int its = 0;
  Eigen::VectorXd z = minres(k, b, inv_diag, options.tol, max_it, &its);
  return split(system, z, relative_residual(k, z, b), its);
}

}  // namespace qcurl
