// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// oracle.hpp: the same model in the full per-site spin space, used to check the
// collective reduction. Basis index = n·2^N + bits, where bit j-1 is set when
// site j is excited.

#pragma once

#include "cavarray/model.hpp"

#include <vector>

namespace cavarray {

inline constexpr int kOracleMaxAtoms = 4;        // operators and propagation
inline constexpr int kOracleMaxSteadyAtoms = 3;  // stationary-state solves

struct FullSpace {
    int atoms = 1;
    int n_max = 1;

    Index spin_dim() const noexcept { return Index(1) << atoms; }
    Index dim() const noexcept { return (n_max + 1) * spin_dim(); }
    Sublattice site_to_sublattice(int site) const { return site_sublattice(site); }
};

// Throws ResourceError when N exceeds kOracleMaxAtoms.
FullSpace full_space(const ModelParams& params);

struct FullOperator {
    FullSpace space;
    SparseMatrix matrix;
};

FullOperator full_hamiltonian(const ModelParams& params);
FullOperator full_excitation(const FullSpace& space);
FullOperator full_annihilation(const FullSpace& space);
FullOperator full_sigma_z(const FullSpace& space, int site);
// Σ_{j∈S} σ⁻_j
FullOperator full_collective_lowering(const FullSpace& space, Sublattice sublattice);

SparseMatrix full_liouvillian(const ModelParams& params);

// Isometry (full dim × collective dim) mapping |n, a, b> to |n> ⊗ |Dicke_A(a)> ⊗ |Dicke_B(b)>.
DenseMatrix collective_embedding(const FullSpace& space);

// Stationary state reached from |0> ⊗ |all down>: repeated shifted solves
// x ← σ (σ - L)⁻¹ x with a plain sparse LU converge to it. Guarded to N <= 3.
DenseMatrix full_steady_state(const ModelParams& params);

struct FullObservables {
    double n_s = 0.0;
    double g1_2_zero = 0.0;
    std::vector<double> p_q;
    std::vector<double> sigma_z;  // sites 1..N
    Eigen::MatrixXd c_z;
    double residual = 0.0;        // ||L vec ρ||₂
};

// Per-site observables evaluated directly on the full-space state.
FullObservables full_observables(const FullSpace& space, const DenseMatrix& rho);
FullObservables full_steady_observables(const ModelParams& params);

// Largest population outside the permutation-symmetric subspace of each sublattice
// seen while propagating |0> ⊗ |all down> to `t_final`, sampled at `samples`
// evenly spaced times. Guarded to N <= 4.
double symmetric_leakage(const ModelParams& params, double t_final, int samples = 20);

}  // namespace cavarray
