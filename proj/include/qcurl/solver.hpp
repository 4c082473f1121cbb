#pragma once

#include <string>

#include <Eigen/Sparse>

#include "qcurl/dofmap.hpp"
#include "qcurl/system.hpp"

namespace qcurl {

using RowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

enum class SolverKind {
  Direct,  ///< sparse LU of the full saddle matrix plus iterative refinement (small n)
  Minres,  ///< MINRES with a positive diagonal preconditioner
};

std::string to_string(SolverKind kind);
SolverKind solver_from_string(const std::string& name);

struct SolveOptions {
  SolverKind kind = SolverKind::Minres;
  /// Target for ||K z - rhs|| / ||rhs||.
  double tol = 1e-10;
  /// 0 selects 10 * system size (MINRES) or 10 refinement steps (direct).
  int max_iterations = 0;
};

struct SolveResult {
  DofVector u;
  DofVector p;
  double relative_residual = 0.0;
  int iterations = 0;
};

/// Throws MaxIterations if the residual target is missed and SingularSystem on breakdown.
SolveResult solve_saddle(const SaddleSystem& system, const SolveOptions& options = {});

/// y = K x, rows in parallel.
void spmv(const RowMatrix& k, const Eigen::VectorXd& x, Eigen::VectorXd& y);

/// Absolute diagonal of A for the velocity block and the diagonal of
/// B^T diag(A)^-1 B for the pressure block.
Eigen::VectorXd diagonal_preconditioner(const SaddleSystem& system);

Eigen::VectorXd minres(const RowMatrix& k, const Eigen::VectorXd& b, const Eigen::VectorXd& inv_diag, double tol,
                       int max_iterations, int* iterations = nullptr);

double relative_residual(const RowMatrix& k, const Eigen::VectorXd& z, const Eigen::VectorXd& b);

namespace reference {

/// Serial twin of spmv.
void spmv(const RowMatrix& k, const Eigen::VectorXd& x, Eigen::VectorXd& y);

}  // namespace reference

}  // namespace qcurl
