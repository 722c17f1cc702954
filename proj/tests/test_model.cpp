// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cavarray/errors.hpp"
#include "cavarray/model.hpp"

#include <cmath>
#include <random>

using namespace cavarray;

namespace {

ModelParams point(int atoms, double phi, double delta, int n_max = 3) {
    ModelParams p;
    p.atoms = atoms;
    p.phi = phi;
    p.delta = delta;
    p.n_max = n_max;
    return p;
}

// random density matrix, fixed seed
DenseMatrix random_state(Index dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> n01;
    DenseMatrix x(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            x(i, j) = Complex(n01(rng), n01(rng));
        }
    }
    DenseMatrix rho = x * x.adjoint();
    return rho / rho.trace();
}

}  // namespace

TEST_CASE("sublattice split and site convention") {
    CHECK(sublattice_sizes(5) == SublatticeSizes{3, 2});
    CHECK(sublattice_sizes(4) == SublatticeSizes{2, 2});
    CHECK(sublattice_sizes(1) == SublatticeSizes{1, 0});
    CHECK_THROWS_AS(sublattice_sizes(0), ParameterError);
    CHECK(site_sublattice(1) == Sublattice::A);
    CHECK(site_sublattice(2) == Sublattice::B);
    CHECK(site_sublattice(7) == Sublattice::A);
}

TEST_CASE("phase from spacing") {
    CHECK(phase_from_spacing(0.5, 1.0) == doctest::Approx(kPi));
    CHECK(phase_from_spacing(1.0, 1.0) == doctest::Approx(0.0));
    CHECK(phase_from_spacing(0.25, 1.0) == doctest::Approx(kPi / 2));
    CHECK(phase_from_spacing(3.0, 1.0) == 0.0);
    CHECK_THROWS_AS(phase_from_spacing(1.0, 0.0), ParameterError);
}

TEST_CASE("parameter validation") {
    ModelParams p;
    CHECK(validated(p) == p);
    p.phi = -kPi / 2;
    CHECK(validated(p).phi == doctest::Approx(3 * kPi / 2));
    p = ModelParams{};
    p.atoms = 0;
    CHECK_THROWS_AS(validated(p), ParameterError);
    p = ModelParams{};
    p.kappa = 2.0;
    CHECK_THROWS_AS(validated(p), ParameterError);
    p = ModelParams{};
    p.gamma = -0.1;
    CHECK_THROWS_AS(validated(p), ParameterError);
    p = ModelParams{};
    p.delta = std::nan("");
    CHECK_THROWS_AS(validated(p), ParameterError);
}

TEST_CASE("single-atom Jaynes-Cummings element") {
    ModelParams p = point(1, 0.0, 0.0);
    p.omega = 0.0;
    const HilbertSpace s = space_for(p);
    const DenseMatrix h = build_hamiltonian(p, s).dense();
    CHECK(h(s.index(1, 0, 0), s.index(0, 1, 0)).real() == doctest::Approx(p.g));
}

TEST_CASE("B sublattice decouples at phi = pi/2") {
    ModelParams p = point(4, kPi / 2, 1.0);
    p.omega = 0.0;
    const HilbertSpace s = space_for(p);
    const DenseMatrix h = build_hamiltonian(p, s).dense();
    for (Index i = 0; i < s.dim(); ++i) {
        for (Index j = 0; j < s.dim(); ++j) {
            const auto li = s.label(i);
            const auto lj = s.label(j);
            if (li.photons != lj.photons && li.exc_b != lj.exc_b) {
                CHECK(std::abs(h(i, j)) < 1e-14);
            }
        }
    }
}

TEST_CASE("Hamiltonian is Hermitian and depends on phi only through cos phi") {
    for (int n : {1, 2, 3, 5}) {
        const ModelParams p = point(n, 0.7, -3.0);
        const HilbertSpace s = space_for(p);
        const QOperator h = build_hamiltonian(p, s);
        CHECK(h.hermiticity_defect() == 0.0);
        const QOperator h2 = build_hamiltonian(point(n, kTwoPi - 0.7, -3.0), s);
        CHECK((h.dense() - h2.dense()).norm() < 1e-13);
        const QOperator h3 = build_hamiltonian(point(n, -0.7, -3.0), s);
        CHECK((h.dense() - h3.dense()).norm() < 1e-13);
    }
}

TEST_CASE("excitation number commutes with H only without drive") {
    ModelParams p = point(3, 1.1, 2.0);
    const HilbertSpace s = space_for(p);
    const QOperator ne = total_excitation(s);
    CHECK(commutator(build_hamiltonian(p, s), ne).max_abs() > 0.01);
    p.omega = 0.0;
    CHECK(commutator(build_hamiltonian(p, s), ne).max_abs() < 1e-12);

    const DenseMatrix d = ne.dense();
    const double n_half = 1.5;
    CHECK(d(s.index(0, 0, 0), s.index(0, 0, 0)).real() == doctest::Approx(-n_half));
    CHECK(d(s.index(1, 0, 0), s.index(1, 0, 0)).real() == doctest::Approx(-n_half + 1));
    CHECK(d(s.index(1, 2, 1), s.index(1, 2, 1)).real() == doctest::Approx(-n_half + 4));
}

TEST_CASE("Liouvillian preserves trace and Hermiticity") {
    for (int n : {1, 3, 4}) {
        const ModelParams p = point(n, 0.4, 5.0);
        const HilbertSpace s = space_for(p);
        const SuperOperator l = build_liouvillian(p, s);
        // vec(I)† L = 0
        const DenseVector id = vectorize(DenseMatrix::Identity(s.dim(), s.dim()));
        const DenseVector row = l.matrix().adjoint() * id;
        CHECK(row.cwiseAbs().maxCoeff() < 1e-10);

        const DenseMatrix rho = random_state(s.dim(), 11u + n);
        const DenseMatrix out = l.apply(rho);
        CHECK(std::abs(out.trace()) < 1e-10);
        CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("vectorized generator matches the dense master equation") {
    const ModelParams p = point(3, 0.9, -1.5, 2);
    const HilbertSpace s = space_for(p);
    const DenseMatrix h = build_hamiltonian(p, s).dense();
    const DenseMatrix rho = random_state(s.dim(), 5u);
    DenseMatrix expect = -kI * (h * rho - rho * h);
    for (const Dissipator& d : model_dissipators(p, s)) {
        const DenseMatrix c = DenseMatrix(d.jump);
        const DenseMatrix cdc = c.adjoint() * c;
        expect += d.rate * (c * rho * c.adjoint() - 0.5 * (cdc * rho + rho * cdc));
    }
    CHECK((build_liouvillian(p, s).apply(rho) - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dissipator rates and single-atom reduction") {
    ModelParams p = point(1, 0.0, 0.0);
    const HilbertSpace s = space_for(p);
    const auto ds = model_dissipators(p, s);
    REQUIRE(ds.size() == 2);  // cavity + sublattice A, B is empty
    CHECK(ds[0].rate == 1.0);
    CHECK(ds[1].rate == doctest::Approx(p.gamma));
    const DenseMatrix sm = DenseMatrix(ds[1].jump);
    CHECK(std::abs(sm(s.index(0, 0, 0), s.index(0, 1, 0)) - 1.0) < 1e-15);

    p = point(5, 0.0, 0.0);
    const auto ds5 = model_dissipators(p, space_for(p));
    REQUIRE(ds5.size() == 3);
    CHECK(ds5[1].rate == doctest::Approx(p.gamma / 3));
    CHECK(ds5[2].rate == doctest::Approx(p.gamma / 2));
}

TEST_CASE("bare damped cavity: every vacuum-photon spin-diagonal state is stationary") {
    ModelParams p = point(2, 0.0, 0.0, 4);
    p.g = p.omega = p.gamma = 0.0;
    const HilbertSpace s = space_for(p);
    const SuperOperator l = build_liouvillian(p, s);
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            const DensityMatrix rho = DensityMatrix::basis_state(s, 0, a, b);
            CHECK(l.apply(rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}
