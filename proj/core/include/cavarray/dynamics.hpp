// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// dynamics.hpp: time propagation under a Liouvillian and the stationary state
//
// Propagation uses an adaptive Dormand–Prince 5(4) pair on the column-stacked
// state. The stationary state is found by solving the vectorized system with the
// ground-state population equation replaced by tr ρ = 1. That system is solved
// by restarted GMRES, right-preconditioned with a sparse LU of the part of the
// generator that conserves the excitation-number difference between ket and bra
// (the drive-free generator, which is block triangular in excitation sectors).
// A full sparse LU and long-time evolution are the fallbacks.

#pragma once

#include "cavarray/model.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cavarray {

enum class SolveMethod { Direct, Evolve };

std::string to_string(SolveMethod m);

struct SolveReport {
    double residual = 0.0;        // ||L vec(ρ)||₂ of the returned state
    SolveMethod method = SolveMethod::Direct;
    int iterations = 0;           // Krylov iterations, or integrator steps for Evolve
    double wall_time = 0.0;       // seconds
    std::vector<double> history;  // residual after each restart / convergence check
};

struct PropagationStats {
    int accepted = 0;
    int rejected = 0;
    double last_step = 0.0;
};

// ------------------------------ raw kernels ----------------------------------
//
// These operate on bare matrices so the per-site oracle (which has its own
// space type) can share them.

// Integrates dv/dt = L v from t = 0 through every time in `checkpoints`
// (ascending, >= 0), calling visit(index, t, v) at each one. `tol` bounds the
// per-step error estimate, scaled by max(1, |v|∞). Throws SolverError when the
// step size underflows.
PropagationStats integrate(const SparseMatrix& generator, DenseVector v,
                           std::span<const double> checkpoints, double tol,
                           const std::function<void(std::size_t, double, const DenseVector&)>& visit);

// Restarted GMRES with right preconditioning. `precondition` applies P⁻¹.
struct GmresResult {
    DenseVector x;
    double residual;  // ||b - A x||₂
    int iterations;
    std::vector<double> history;
};
GmresResult gmres(const SparseMatrix& a, const DenseVector& b,
                  const std::function<DenseVector(const DenseVector&)>& precondition, double tol,
                  int restart, int max_iterations);

// --------------------------- typed operations --------------------------------

inline constexpr double kDefaultPropagationTol = 1e-10;
inline constexpr double kDefaultSteadyTol = 1e-10;

// ρ(t) = exp(L t)[ρ0], re-Hermitized and trace-renormalized.
DensityMatrix propagate(const SuperOperator& l, const DensityMatrix& rho0, double t,
                        double tol = kDefaultPropagationTol);

// Unique stationary state. Requires a driven or dissipative atom sector; the
// drive-free, loss-free case has a degenerate stationary manifold and is not
// resolved here.
struct SteadyState {
    DensityMatrix rho;
    SolveReport report;
};
SteadyState steady_state(const SuperOperator& l, double tol = kDefaultSteadyTol);

// Same as steady_state but skips the preconditioned Krylov route. Used to check
// the two routes against each other. Stops at residual < tol, or earlier once the
// residual stalls below tol·‖L‖₁ (the integrator's own floor); report.residual is
// the true value either way.
SteadyState steady_state_by_evolution(const SuperOperator& l, double tol = kDefaultSteadyTol,
                                      double max_time = 1e5);

// ||L vec(ρ)||₂
double steady_residual(const SuperOperator& l, const DenseMatrix& rho);

// The part of a generator on `space` that conserves (e_ket - e_bra), with e the
// total excitation number of a basis state.
SparseMatrix excitation_conserving_part(const HilbertSpace& space, const SparseMatrix& generator);

}  // namespace cavarray
