// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/spectrum.hpp"

#include "cavarray/errors.hpp"
#include "cavarray/parallel.hpp"

#include <cmath>
#include <string>

namespace cavarray {

RealVector SectorSpectrum::relative_energies() const {
    return energies.array() - vacuum_energy;
}

SectorSpectrum diagonalize_sector(const QOperator& hamiltonian, const QOperator& excitation,
                                  int sector) {
    const HilbertSpace& space = hamiltonian.space();
    if (!(space == excitation.space())) {
        throw StructuralError("diagonalize_sector: H and N_e live on different spaces");
    }
    const double scale = std::max(1.0, hamiltonian.max_abs());
    if (commutator(hamiltonian, excitation).max_abs() > 1e-12 * scale) {
        throw ContractViolation(
            "diagonalize_sector: [H, N_e] != 0; sector projection needs the drive switched off");
    }

    SectorSpectrum out;
    out.sector = sector;
    out.vacuum_energy = hamiltonian.matrix().coeff(0, 0).real();

    const double target = sector - 0.5 * space.atoms();
    std::vector<Index> members;
    for (Index i = 0; i < space.dim(); ++i) {
        if (std::abs(excitation.matrix().coeff(i, i).real() - target) < 1e-9) {
            members.push_back(i);
        }
    }
    if (members.empty()) {
        out.energies.resize(0);
        out.states.resize(space.dim(), 0);
        return out;
    }

    const auto k = static_cast<Index>(members.size());
    DenseMatrix block(k, k);
    for (Index r = 0; r < k; ++r) {
        for (Index c = 0; c < k; ++c) {
            block(r, c) = hamiltonian.matrix().coeff(members[r], members[c]);
        }
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(block);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("diagonalize_sector: eigensolver failed");
    }
    out.energies = es.eigenvalues();
    out.states = DenseMatrix::Zero(space.dim(), k);
    for (Index r = 0; r < k; ++r) {
        out.states.row(members[r]) = es.eigenvectors().row(r);
    }
    return out;
}

std::vector<int> degeneracy_groups(const RealVector& ascending) {
    std::vector<int> groups;
    for (Index i = 0; i < ascending.size(); ++i) {
        const double e = ascending(i);
        if (i > 0 && std::abs(e - ascending(i - 1)) <= kDegeneracyTol * std::max(1.0, std::abs(e))) {
            ++groups.back();
        } else {
            groups.push_back(1);
        }
    }
    return groups;
}

// ----------------------------- single excitation -----------------------------

AnalyticSingleExcitation single_excitation_analytic(const ModelParams& params) {
    const ModelParams p = validated(params);
    const HilbertSpace space = space_for(p);
    const auto [n_a, n_b] = sublattice_sizes(p.atoms);
    const double c = std::cos(p.phi);
    const double weight = n_a + n_b * c * c;
    const double split = p.g * std::sqrt(weight);

    AnalyticSingleExcitation out;
    out.e_plus = p.delta + split;
    out.e_minus = p.delta - split;
    out.beta_a = std::sqrt(static_cast<double>(n_a)) / std::sqrt(weight);
    out.beta_b = std::sqrt(static_cast<double>(n_b)) * c / std::sqrt(weight);

    const DenseVector photon = basis_ket(space, 1, 0, 0);
    DenseVector atomic = out.beta_a * basis_ket(space, 0, 1, 0);
    if (n_b > 0) {
        atomic += out.beta_b * basis_ket(space, 0, 0, 1);
    }
    out.psi_plus = (photon + atomic) / std::sqrt(2.0);
    out.psi_minus = (photon - atomic) / std::sqrt(2.0);
    if (n_b > 0) {
        out.e_zero = p.delta;
        out.psi_zero = -out.beta_b * basis_ket(space, 0, 1, 0) + out.beta_a * basis_ket(space, 0, 0, 1);
    }
    return out;
}

// ------------------------------ middle branch --------------------------------

namespace {

void require_two_atoms_at_pi(const ModelParams& p, int n, const char* who) {
    if (p.atoms != 2) {
        throw ContractViolation(std::string(who) + ": defined for N = 2 only");
    }
    if (std::abs(p.phi - kPi) > 1e-12) {
        throw ContractViolation(std::string(who) + ": defined at phi = pi only");
    }
    if (n < 2 || n > p.n_max) {
        throw ParameterError(std::string(who) + ": need 2 <= n <= n_max");
    }
}

}  // namespace

DressedPair middle_branch_dressed_states(const ModelParams& params, int n) {
    const ModelParams p = validated(params);
    require_two_atoms_at_pi(p, n, "middle_branch_dressed_states");
    const HilbertSpace space = space_for(p);
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (basis_ket(space, n - 1, 1, 0) + basis_ket(space, n - 1, 0, 1)),
            r * (basis_ket(space, n, 0, 0) + basis_ket(space, n - 2, 1, 1))};
}

DenseVector middle_branch_exact_minus(const ModelParams& params, int n) {
    const ModelParams p = validated(params);
    require_two_atoms_at_pi(p, n, "middle_branch_exact_minus");
    const HilbertSpace space = space_for(p);
    const DenseVector v = std::sqrt(n - 1.0) * basis_ket(space, n, 0, 0) +
                          std::sqrt(static_cast<double>(n)) * basis_ket(space, n - 2, 1, 1);
    return v / std::sqrt(2.0 * n - 1.0);
}

double subspace_fidelity(const DenseVector& psi, const DenseMatrix& basis) {
    if (basis.cols() == 0) {
        return 0.0;
    }
    if (basis.rows() != psi.size()) {
        throw StructuralError("subspace_fidelity: dimension mismatch");
    }
    return (basis.adjoint() * psi).squaredNorm() / psi.squaredNorm();
}

DenseMatrix eigenspace_at(const SectorSpectrum& spectrum, double energy, double tol) {
    const RealVector rel = spectrum.relative_energies();
    std::vector<Index> keep;
    for (Index i = 0; i < rel.size(); ++i) {
        if (std::abs(rel(i) - energy) <= tol) {
            keep.push_back(i);
        }
    }
    DenseMatrix out(spectrum.states.rows(), static_cast<Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        out.col(static_cast<Index>(c)) = spectrum.states.col(keep[c]);
    }
    return out;
}

// ------------------------------- branch sweep --------------------------------

BranchTable branch_sweep(const ModelParams& params, const std::vector<double>& phi_grid,
                         int max_sector) {
    const ModelParams base = validated(params);
    if (base.omega != 0.0) {
        throw ContractViolation("branch_sweep: sector spectra require omega = 0");
    }
    if (max_sector < 0) {
        throw ParameterError("branch_sweep: max_sector must be >= 0");
    }
    const HilbertSpace space = space_for(base);
    const QOperator excitation = total_excitation(space);

    BranchTable table;
    table.phi_grid = phi_grid;
    for (int s = 0; s <= max_sector; ++s) {
        table.sectors.push_back(s);
    }
    table.energies.assign(phi_grid.size(), std::vector<RealVector>(table.sectors.size()));
    table.distinct_levels.assign(phi_grid.size(), std::vector<int>(table.sectors.size(), 0));
    table.branch_count.assign(table.sectors.size(), 0);

    parallel_for(phi_grid.size(), default_jobs(), [&](std::size_t pi) {
        ModelParams p = base;
        p.phi = phi_grid[pi];
        const QOperator h = build_hamiltonian(p, space);
        for (std::size_t si = 0; si < table.sectors.size(); ++si) {
            const SectorSpectrum sec = diagonalize_sector(h, excitation, table.sectors[si]);
            table.energies[pi][si] = sec.relative_energies();
            table.distinct_levels[pi][si] =
                static_cast<int>(degeneracy_groups(table.energies[pi][si]).size());
        }
    });
    for (std::size_t si = 0; si < table.sectors.size(); ++si) {
        table.branch_count[si] =
            phi_grid.empty() ? 0 : static_cast<int>(table.energies.front()[si].size());
    }
    return table;
}

}  // namespace cavarray
