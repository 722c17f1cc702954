// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// model.hpp: two-sublattice Tavis–Cummings Hamiltonian, Lindblad generator and geometry helpers
//
//   H = Δ a†a + Δ (J^z_A + J^z_B) + Ω (J^x_A + J^x_B)
//       + g a† (J^-_A + cos φ J^-_B) + g a (J^+_A + cos φ J^+_B)
//
//   dρ/dt = -i[H, ρ] + κ D[a]ρ + (γ/N_A) D[J^-_A]ρ + (γ/N_B) D[J^-_B]ρ
//
// All rates are in units of the cavity decay κ, which is fixed to 1.

#pragma once

#include "cavarray/hilbert.hpp"

#include <vector>

namespace cavarray {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct ModelParams {
    int atoms = 2;          // N
    double phi = 0.0;       // interference phase, radians
    double delta = 0.0;     // Δ = Δ_c = Δ_a
    double g = 10.0;
    double omega = 0.2;
    double kappa = 1.0;
    double gamma = 0.1;
    int n_max = 8;

    bool operator==(const ModelParams&) const = default;
};

// Wraps phi into [0, 2π).
double wrap_phase(double phi);

// Checks every ModelParams invariant and returns a copy with phi wrapped.
// Throws ParameterError.
ModelParams validated(ModelParams params);

struct SublatticeSizes {
    int n_a;
    int n_b;
    bool operator==(const SublatticeSizes&) const = default;
};

// N_A = ceil(N/2), N_B = floor(N/2).
SublatticeSizes sublattice_sizes(int atoms);

// Site j (1-indexed) sits on A when odd, B when even.
Sublattice site_sublattice(int site);

// φ = 2π d1/λ mod 2π.
double phase_from_spacing(double d1, double wavelength);

HilbertSpace space_for(const ModelParams& params);

QOperator build_hamiltonian(const ModelParams& params, const HilbertSpace& space);

// N_e = a†a + J^z_A + J^z_B (diagonal).
QOperator total_excitation(const HilbertSpace& space);

// Linear generator acting on column-stacked density matrices (dim² × dim²).
class SuperOperator {
public:
    SuperOperator(HilbertSpace space, SparseMatrix matrix);

    const HilbertSpace& space() const noexcept { return space_; }
    const SparseMatrix& matrix() const noexcept { return matrix_; }

    DenseMatrix apply(const DenseMatrix& rho) const;

private:
    HilbertSpace space_;
    SparseMatrix matrix_;
};

struct Dissipator {
    double rate;
    SparseMatrix jump;
};

// -i[H,·] + Σ rate D[jump] under column stacking. Works on any square H.
SparseMatrix lindblad_generator(const SparseMatrix& hamiltonian,
                                const std::vector<Dissipator>& dissipators);

// Jump operators of the master equation with their rates (empty sublattices omitted).
std::vector<Dissipator> model_dissipators(const ModelParams& params, const HilbertSpace& space);

SuperOperator build_liouvillian(const ModelParams& params, const HilbertSpace& space);

}  // namespace cavarray
