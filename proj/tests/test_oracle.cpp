// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cavarray/dynamics.hpp"
#include "cavarray/errors.hpp"
#include "cavarray/observables.hpp"
#include "cavarray/oracle.hpp"
#include "cavarray/semiclassics.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

using namespace cavarray;

namespace {

ModelParams point(int atoms, double phi, double delta, int n_max) {
    ModelParams p;
    p.atoms = atoms;
    p.phi = phi;
    p.delta = delta;
    p.n_max = n_max;
    return p;
}

}  // namespace

TEST_CASE("full-space sizes and guards") {
    const FullSpace s = full_space(point(3, 0.0, 0.0, 4));
    CHECK(s.spin_dim() == 8);
    CHECK(s.dim() == 40);
    CHECK(s.site_to_sublattice(3) == Sublattice::A);
    CHECK_THROWS_AS(full_space(point(5, 0.0, 0.0, 2)), ResourceError);
    CHECK_THROWS_AS(full_steady_state(point(4, 0.0, 0.0, 2)), ResourceError);
}

TEST_CASE("Dicke embedding is an isometry") {
    for (int n = 1; n <= 4; ++n) {
        const FullSpace s = full_space(point(n, 0.0, 0.0, 2));
        const DenseMatrix v = collective_embedding(s);
        const HilbertSpace c = space_for(point(n, 0.0, 0.0, 2));
        REQUIRE(v.rows() == s.dim());
        REQUIRE(v.cols() == c.dim());
        CHECK((v.adjoint() * v - DenseMatrix::Identity(c.dim(), c.dim())).norm() < 1e-13);
    }
}

TEST_CASE("collective Hamiltonian is the symmetric-sector block of the per-site one") {
    for (int n = 1; n <= 4; ++n) {
        for (double phi : {0.0, 0.8, kPi}) {
            ModelParams p = point(n, phi, -2.5, 3);
            p.omega = 0.7;
            const DenseMatrix v = collective_embedding(full_space(p));
            const DenseMatrix hf = DenseMatrix(full_hamiltonian(p).matrix);
            const DenseMatrix hc = build_hamiltonian(p, space_for(p)).dense();
            CHECK((v.adjoint() * hf * v - hc).cwiseAbs().maxCoeff() < 1e-12);
            // the symmetric sector is invariant under H
            CHECK((hf * v - v * hc).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("per-site excitation number commutes with the undriven Hamiltonian") {
    ModelParams p = point(4, 1.3, 0.4, 2);
    p.omega = 0.0;
    const FullOperator h = full_hamiltonian(p);
    const FullOperator ne = full_excitation(h.space);
    const SparseMatrix c = h.matrix * ne.matrix - ne.matrix * h.matrix;
    CHECK(max_abs(c) < 1e-13);
    const DenseMatrix v = collective_embedding(h.space);
    CHECK((v.adjoint() * DenseMatrix(ne.matrix) * v - total_excitation(space_for(p)).dense())
              .cwiseAbs()
              .maxCoeff() < 1e-13);
}

TEST_CASE("single atom: both constructions coincide") {
    const ModelParams p = point(1, 0.0, 3.0, 4);
    const DenseMatrix hf = DenseMatrix(full_hamiltonian(p).matrix);
    const DenseMatrix hc = build_hamiltonian(p, space_for(p)).dense();
    CHECK((hf - hc).cwiseAbs().maxCoeff() < 1e-14);
    const DenseMatrix lf = DenseMatrix(full_liouvillian(p));
    const DenseMatrix lc = DenseMatrix(build_liouvillian(p, space_for(p)).matrix());
    CHECK((lf - lc).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Liouvillians intertwine through the embedding") {
    const ModelParams p = point(3, 2.0, 1.5, 2);
    const DenseMatrix v = collective_embedding(full_space(p));
    const DenseMatrix w = Eigen::kroneckerProduct(v.conjugate(), v);  // vec(VρV†) = (V̄ ⊗ V) vec ρ
    const DenseMatrix lf = DenseMatrix(full_liouvillian(p));
    const DenseMatrix lc = DenseMatrix(build_liouvillian(p, space_for(p)).matrix());
    CHECK((lf * w - w * lc).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("collective lowering sums the per-site operators") {
    const FullSpace s = full_space(point(3, 0.0, 0.0, 1));
    const DenseMatrix v = collective_embedding(s);
    const HilbertSpace c = space_for(point(3, 0.0, 0.0, 1));
    for (Sublattice sub : {Sublattice::A, Sublattice::B}) {
        const DenseMatrix lf = DenseMatrix(full_collective_lowering(s, sub).matrix);
        const DenseMatrix lc = collective_spin(c, sub, SpinComponent::Minus).dense();
        CHECK((v.adjoint() * lf * v - lc).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("two atoms at the middle branch: photon number agrees with the collective solve") {
    const ModelParams p = point(2, kPi, 0.0, 6);
    const FullObservables full = full_steady_observables(p);
    const SteadyState ss = steady_state(build_liouvillian(p, space_for(p)), 1e-13);
    CHECK(std::abs(full.n_s - photon_number(ss.rho)) < 1e-8);
    CHECK(full.residual < 1e-10);
}

TEST_CASE("three atoms at the sideband: permutation symmetry is found, not assumed") {
    ModelParams p = point(3, 0.0, 0.0, 5);
    p.delta = vacuum_rabi_splitting(p).plus;
    const FullObservables full = full_steady_observables(p);
    CHECK(std::abs(full.sigma_z[0] - full.sigma_z[2]) < 1e-10);
    const SteadyState ss = steady_state(build_liouvillian(p, space_for(p)), 1e-13);
    const SpinProfile sp = spin_profile(ss.rho);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(sp.sigma_z[i] - full.sigma_z[i]) < 1e-8);
        for (int j = 0; j < 3; ++j) {
            CHECK(std::abs(sp.c_z(i, j) - full.c_z(i, j)) < 1e-8);
        }
    }
}

TEST_CASE("dynamics never leaves the symmetric sector") {
    CHECK(symmetric_leakage(point(3, kPi, 0.0, 4), 20.0, 10) < 1e-10);
    CHECK(symmetric_leakage(point(4, 0.5, 5.0, 2), 20.0, 5) < 1e-10);
}
