#pragma once

#include <cstdint>

#include "qcurl/spaces.hpp"
#include "qcurl/system.hpp"

namespace qcurl {

// Exact identities of the element construction. Each function returns the
// largest defect found; callers compare against their own tolerance.

/// max |Pi_K(curl v) - curl(I_K v)| over coefficients, for random v of per-axis degree <= 3.
double commuting_defect_cell(const SpaceLibrary& lib, int trials, std::uint64_t seed);

/// max |Pi_M(curl_h v_h) - curl(I_M v_h)| over coefficients, for random v_h in V_h restricted
/// to an interior macroelement.
double commuting_defect_macro(const SpaceLibrary& lib, int trials, std::uint64_t seed);

/// max |(grad(w - Pi_K w), grad w_h)| over w in [P2]^3 monomials and the W_K basis, on the reference cell.
double orthogonality_defect_wk(const SpaceLibrary& lib);

/// max |(v - I0_K v, grad q)| over v in [P1]^3 monomials and the Q1 basis, on the reference cell.
double orthogonality_defect_vk(const SpaceLibrary& lib);

/// max |int_K curl(phi - I^C_K phi)| over the V_K duals phi.
double nedelec_curl_defect(const SpaceLibrary& lib);

/// max |int_F [w_h]| over interior faces and components, random w_h in W_h on an n-mesh.
double jump_defect(const SpaceLibrary& lib, int n, std::uint64_t seed);

/// Largest mixed-monomial coefficient in the W_K span and dual basis.
double mixed_monomial_defect(const SpaceLibrary& lib);

/// max coefficient difference between I_3h(I_h u) and I_3h(u) for the manufactured u.
double i3h_consistency_defect(const SpaceLibrary& lib, int n, int quad_order = 6);

struct DenseOracleResult {
  double max_coefficient_diff = 0.0;
  double pressure_max = 0.0;
  double relative_residual = 0.0;
};

/// Solves the n-mesh system for the manufactured f with MINRES and with a dense
/// symmetric-indefinite factorization (LAPACK dsysv), and compares.
DenseOracleResult dense_oracle(const SpaceLibrary& lib, int n, Scheme scheme, double tol);

}  // namespace qcurl
