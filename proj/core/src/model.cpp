// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/model.hpp"

#include "cavarray/errors.hpp"

#include <cmath>
#include <string>

namespace cavarray {

double wrap_phase(double phi) {
    if (!std::isfinite(phi)) {
        throw ParameterError("phase must be finite");
    }
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    // fmod of values just below 2π can round up to exactly 2π after the shift.
    return w >= kTwoPi ? 0.0 : w;
}

ModelParams validated(ModelParams p) {
    if (p.atoms < 1) {
        throw ParameterError("ModelParams: N must be >= 1, got " + std::to_string(p.atoms));
    }
    if (p.n_max < 1) {
        throw ParameterError("ModelParams: n_max must be >= 1");
    }
    if (p.kappa != 1.0) {
        throw ParameterError("ModelParams: rates are in units of kappa, so kappa must be exactly 1");
    }
    if (!(p.gamma >= 0.0) || !(p.g >= 0.0) || !(p.omega >= 0.0)) {
        throw ParameterError("ModelParams: gamma, g and omega must be >= 0");
    }
    if (!std::isfinite(p.delta) || !std::isfinite(p.gamma) || !std::isfinite(p.g) ||
        !std::isfinite(p.omega)) {
        throw ParameterError("ModelParams: non-finite parameter");
    }
    p.phi = wrap_phase(p.phi);
    return p;
}

SublatticeSizes sublattice_sizes(int atoms) {
    if (atoms < 1) {
        throw ParameterError("sublattice_sizes: N must be >= 1");
    }
    return {(atoms + 1) / 2, atoms / 2};
}

Sublattice site_sublattice(int site) {
    if (site < 1) {
        throw ParameterError("site_sublattice: sites are 1-indexed");
    }
    return site % 2 == 1 ? Sublattice::A : Sublattice::B;
}

double phase_from_spacing(double d1, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw ParameterError("phase_from_spacing: wavelength must be > 0");
    }
    if (!(d1 >= 0.0)) {
        throw ParameterError("phase_from_spacing: spacing must be >= 0");
    }
    // Reduce d1/λ first so exact multiples of λ land on 0 rather than 2π - ε.
    const double turns = std::fmod(d1 / wavelength, 1.0);
    return wrap_phase(kTwoPi * turns);
}

HilbertSpace space_for(const ModelParams& params) {
    const auto sizes = sublattice_sizes(params.atoms);
    return make_space(params.n_max, sizes.n_a, sizes.n_b);
}

namespace {

void require_consistent(const ModelParams& p, const HilbertSpace& space, const char* who) {
    const auto sizes = sublattice_sizes(p.atoms);
    if (space.n_a() != sizes.n_a || space.n_b() != sizes.n_b || space.n_max() != p.n_max) {
        throw StructuralError(std::string(who) + ": space " + space.describe() +
                              " does not match N=" + std::to_string(p.atoms) +
                              ", n_max=" + std::to_string(p.n_max));
    }
}

}  // namespace

QOperator build_hamiltonian(const ModelParams& params, const HilbertSpace& space) {
    const ModelParams p = validated(params);
    require_consistent(p, space, "build_hamiltonian");

    const QOperator a = annihilation(space);
    const QOperator ad = a.adjoint();
    const QOperator jz = collective_spin(space, Sublattice::A, SpinComponent::Z) +
                         collective_spin(space, Sublattice::B, SpinComponent::Z);
    const QOperator jx = collective_spin(space, Sublattice::A, SpinComponent::X) +
                         collective_spin(space, Sublattice::B, SpinComponent::X);
    const double c = std::cos(p.phi);
    const QOperator lower = collective_spin(space, Sublattice::A, SpinComponent::Minus) +
                            c * collective_spin(space, Sublattice::B, SpinComponent::Minus);
    const QOperator coupling = ad * lower;

    QOperator h = p.delta * (ad * a) + p.delta * jz + p.omega * jx;
    h += p.g * (coupling + coupling.adjoint());
    return h;
}

QOperator total_excitation(const HilbertSpace& space) {
    return number_operator(space) + collective_spin(space, Sublattice::A, SpinComponent::Z) +
           collective_spin(space, Sublattice::B, SpinComponent::Z);
}

// ------------------------------ SuperOperator -------------------------------

SuperOperator::SuperOperator(HilbertSpace space, SparseMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    const Index d2 = space_.dim() * space_.dim();
    if (matrix_.rows() != d2 || matrix_.cols() != d2) {
        throw StructuralError("SuperOperator: matrix shape does not match dim^2 of " +
                              space_.describe());
    }
    matrix_.makeCompressed();
}

DenseMatrix SuperOperator::apply(const DenseMatrix& rho) const {
    if (rho.rows() != space_.dim() || rho.cols() != space_.dim()) {
        throw StructuralError("SuperOperator::apply: state shape mismatch");
    }
    return unvectorize(matrix_ * vectorize(rho), space_.dim());
}

SparseMatrix lindblad_generator(const SparseMatrix& hamiltonian,
                                const std::vector<Dissipator>& dissipators) {
    const Index d = hamiltonian.rows();
    if (hamiltonian.cols() != d) {
        throw StructuralError("lindblad_generator: Hamiltonian must be square");
    }
    const SparseMatrix id = sparse_identity(d);
    const SparseMatrix h_t = hamiltonian.transpose();

    // vec(Aρ) = (I ⊗ A) vec ρ, vec(ρB) = (Bᵀ ⊗ I) vec ρ.
    SparseMatrix gen = Complex(0.0, -1.0) * (kron(id, hamiltonian) - kron(h_t, id));
    for (const auto& d_op : dissipators) {
        if (d_op.rate == 0.0) {
            continue;
        }
        if (d_op.jump.rows() != d || d_op.jump.cols() != d) {
            throw StructuralError("lindblad_generator: jump operator shape mismatch");
        }
        const SparseMatrix cdc = d_op.jump.adjoint() * d_op.jump;
        const SparseMatrix cdc_t = cdc.transpose();
        const SparseMatrix jump_conj = d_op.jump.conjugate();
        gen += d_op.rate * (kron(jump_conj, d_op.jump) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc_t, id));
    }
    gen.prune(kStructuralZero, 1.0);
    gen.makeCompressed();
    return gen;
}

std::vector<Dissipator> model_dissipators(const ModelParams& params, const HilbertSpace& space) {
    const ModelParams p = validated(params);
    require_consistent(p, space, "model_dissipators");
    std::vector<Dissipator> out;
    out.push_back({p.kappa, annihilation(space).matrix()});
    if (space.n_a() > 0) {
        out.push_back({p.gamma / space.n_a(),
                       collective_spin(space, Sublattice::A, SpinComponent::Minus).matrix()});
    }
    if (space.n_b() > 0) {
        out.push_back({p.gamma / space.n_b(),
                       collective_spin(space, Sublattice::B, SpinComponent::Minus).matrix()});
    }
    return out;
}

SuperOperator build_liouvillian(const ModelParams& params, const HilbertSpace& space) {
    const QOperator h = build_hamiltonian(params, space);
    return {space, lindblad_generator(h.matrix(), model_dissipators(params, space))};
}

}  // namespace cavarray
