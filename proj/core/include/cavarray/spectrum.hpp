// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// spectrum.hpp: exact diagonalization inside excitation-number sectors and the
// closed-form single-excitation and two-atom middle-branch eigenstates.

#pragma once

#include "cavarray/model.hpp"

#include <optional>
#include <vector>

namespace cavarray {

// Eigenpairs of H restricted to the N_e eigenspace with eigenvalue sector - N/2.
struct SectorSpectrum {
    int sector = 0;
    double vacuum_energy = 0.0;  // energy of |0,0,0>, i.e. -NΔ/2 for the model Hamiltonian
    RealVector energies;         // ascending, absolute
    DenseMatrix states;          // dim × count, eigenvectors embedded in the full space

    Index size() const noexcept { return energies.size(); }
    // Energies with the vacuum energy subtracted.
    RealVector relative_energies() const;
};

// Throws ContractViolation if [H, N_e] != 0 (a drive is present). Sectors outside
// [0, n_max + N] are empty and give an empty result.
SectorSpectrum diagonalize_sector(const QOperator& hamiltonian, const QOperator& excitation,
                                  int sector);

// Eigenvalues within 1e-8·max(1, |E|) of their neighbour form one level.
inline constexpr double kDegeneracyTol = 1e-8;

// Sizes of degenerate groups in an ascending list of energies.
std::vector<int> degeneracy_groups(const RealVector& ascending);

struct AnalyticSingleExcitation {
    double e_plus = 0.0;    // Δ + g sqrt(N_A + N_B cos²φ), relative to the vacuum energy
    double e_minus = 0.0;
    std::optional<double> e_zero;   // Δ; absent for a single atom
    double beta_a = 1.0;
    double beta_b = 0.0;
    DenseVector psi_plus;
    DenseVector psi_minus;
    std::optional<DenseVector> psi_zero;
};

AnalyticSingleExcitation single_excitation_analytic(const ModelParams& params);

// Two-atom middle-branch dressed states at φ = π in the form printed with the
// model: |Ψ+> = (|n-1,1_A> + |n-1,1_B>)/√2 and |Ψ-> = (|n,0> + |n-2,2>)/√2.
struct DressedPair {
    DenseVector plus;
    DenseVector minus;
};
DressedPair middle_branch_dressed_states(const ModelParams& params, int n);

// Exact zero-energy partner of |Ψ+> in the same sector at Δ = 0:
// (√(n-1)|n,0> + √n|n-2,2>)/√(2n-1). The equal-weight |Ψ-> above is its large-n limit.
DenseVector middle_branch_exact_minus(const ModelParams& params, int n);

// Projection weight <ψ|P|ψ> of a normalized ψ onto span(columns of `basis`),
// where the columns are orthonormal.
double subspace_fidelity(const DenseVector& psi, const DenseMatrix& basis);

// Eigenvectors of a sector whose relative energy is within `tol` of `energy`.
DenseMatrix eigenspace_at(const SectorSpectrum& spectrum, double energy, double tol);

struct BranchTable {
    std::vector<double> phi_grid;
    std::vector<int> sectors;                       // 0..max_sector
    // energies[p][s] = ascending relative energies of sector s at phi_grid[p]
    std::vector<std::vector<RealVector>> energies;
    // branch count per sector (equals the sector dimension)
    std::vector<int> branch_count;
    // distinct levels per phi and sector after degeneracy grouping
    std::vector<std::vector<int>> distinct_levels;
};

// Diagonalizes sectors 0..max_sector for every phase. Requires omega == 0.
BranchTable branch_sweep(const ModelParams& params, const std::vector<double>& phi_grid,
                         int max_sector);

}  // namespace cavarray
