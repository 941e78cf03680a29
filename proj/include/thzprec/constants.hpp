// SPDX-License-Identifier: Apache-2.0
//
// Shared numeric tolerances and solver defaults. Every invariant checked
// elsewhere in the library cites one of these constants.

#pragma once

namespace thzprec::tol {

// Linear algebra kernels
inline constexpr double svd_reconstruct = 1e-9;      // relative Frobenius error of U*S*V^H
inline constexpr double svd_orthonormal = 1e-9;      // max deviation of U^H*U, V^H*V from I
inline constexpr double hermitian_symmetry = 1e-10;  // |A - A^H| gate for Hermitian ops
inline constexpr double inverse_residual = 1e-8;     // max-entry error of A*inv(A) - I
inline constexpr double condition_cap = 1e12;        // estimated condition number cutoff

// Channel and steering vectors
inline constexpr double steering_norm = 1e-12;       // unit-norm deviation of array responses

// Precoder invariants
inline constexpr double power_constraint = 1e-9;     // ||F_RF*F_BB[k]||_F^2 vs N_s*P_t
inline constexpr double modulus = 1e-9;              // per-entry constant-modulus deviation
inline constexpr double codebook_membership = 1e-9;  // phase distance to nearest codebook entry

// Rate identities and solver behaviour
inline constexpr double sylvester_gap = 1e-4;        // decoupled vs direct rate at alpha=1e-8
inline constexpr double monotonic_slack = 1e-6;      // allowed per-outer-iteration rate decrease
inline constexpr double dominance_slack = 1e-6;      // feasible-set inclusion comparisons
inline constexpr double trace_final_rate = 1e-9;     // report trace vs recomputed rate

// Solver defaults
inline constexpr double default_rel_tol = 1e-3;      // outer-loop relative rate change
inline constexpr int default_max_iters = 10;
inline constexpr double alpha_rel = 1e-8;            // Q[k] regularizer relative to trace scale

}  // namespace thzprec::tol
