// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cavarray/errors.hpp"
#include "cavarray/semiclassics.hpp"
#include "cavarray/spectrum.hpp"

#include <cmath>

using namespace cavarray;

namespace {

ModelParams bare(int atoms, double phi, double delta, int n_max = 3) {
    ModelParams p;
    p.atoms = atoms;
    p.phi = phi;
    p.delta = delta;
    p.omega = 0.0;
    p.n_max = n_max;
    return p;
}

SectorSpectrum sector(const ModelParams& p, int k) {
    const HilbertSpace s = space_for(p);
    return diagonalize_sector(build_hamiltonian(p, s), total_excitation(s), k);
}

}  // namespace

TEST_CASE("vacuum sector energy is -N delta / 2") {
    const ModelParams p = bare(5, 0.3, 2.5);
    const SectorSpectrum s0 = sector(p, 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0.energies(0) == doctest::Approx(-5 * 2.5 / 2));
    CHECK(s0.vacuum_energy == doctest::Approx(-5 * 2.5 / 2));
    CHECK(s0.relative_energies()(0) == doctest::Approx(0.0));
}

TEST_CASE("single-excitation branches: N=5, phi=0") {
    const ModelParams p = bare(5, 0.0, 1.0);
    const RealVector e = sector(p, 1).relative_energies();
    REQUIRE(e.size() == 1 + 2);  // |1,0,0>, |0,1,0>, |0,0,1>
    CHECK(e(0) == doctest::Approx(1.0 - 10 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(e(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e(2) == doctest::Approx(1.0 + 10 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(single_excitation_analytic(p).e_plus - 1.0 == doctest::Approx(22.360679774997898));
}

TEST_CASE("single-excitation branches: N=2, phi=pi/2 decouples B") {
    const RealVector e = sector(bare(2, kPi / 2, 0.0), 1).relative_energies();
    CHECK(e(0) == doctest::Approx(-10.0));
    CHECK(std::abs(e(1)) < 1e-12);
    CHECK(e(2) == doctest::Approx(10.0));
}

TEST_CASE("analytic single-excitation states diagonalize H") {
    for (int n = 1; n <= 8; ++n) {
        for (double phi : {0.0, kPi / 3, 2.0, kPi}) {
            const ModelParams p = bare(n, phi, -4.0, 2);
            const HilbertSpace s = space_for(p);
            const DenseMatrix h = build_hamiltonian(p, s).dense();
            const double vac = -n * p.delta / 2;
            const auto an = single_excitation_analytic(p);
            const auto residual = [&](const DenseVector& v, double e) {
                return (h * v - (e + vac) * v).norm();
            };
            CHECK(residual(an.psi_plus, an.e_plus) < 1e-10);
            CHECK(residual(an.psi_minus, an.e_minus) < 1e-10);
            CHECK(std::abs(an.beta_a * an.beta_a + an.beta_b * an.beta_b - 1.0) < 1e-14);
            if (n >= 2) {
                REQUIRE(an.psi_zero.has_value());
                CHECK(residual(*an.psi_zero, *an.e_zero) < 1e-10);
                // dark state carries no photon
                const DenseVector& d = *an.psi_zero;
                CHECK(std::abs(d(s.index(1, 0, 0))) == 0.0);
            } else {
                CHECK_FALSE(an.e_zero.has_value());
            }
        }
    }
    const auto an = single_excitation_analytic(bare(2, kPi, 0.0));
    CHECK(an.beta_a == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(an.beta_b == doctest::Approx(-1 / std::sqrt(2.0)));
}

TEST_CASE("sector diagonalization needs the U(1) symmetry") {
    ModelParams p = bare(3, 0.0, 0.0);
    p.omega = 0.2;
    CHECK_THROWS_AS(sector(p, 1), ContractViolation);
}

TEST_CASE("sectors beyond the space are empty") {
    const ModelParams p = bare(2, 0.0, 0.0, 2);
    CHECK(sector(p, 5).size() == 0);
    CHECK(sector(p, -1).size() == 0);
    CHECK(sector(p, 4).size() == 1);  // |2, 1, 1>
}

TEST_CASE("degeneracy grouping") {
    RealVector e(5);
    e << -1.0, 0.0, 1e-12, 2.0, 2.0 + 1e-10;
    CHECK(degeneracy_groups(e) == std::vector<int>{1, 2, 2});
    CHECK(degeneracy_groups(RealVector()).empty());
}

TEST_CASE("branch sweep: three single-excitation branches, 4/5/6 double-excitation branches") {
    const std::vector<double> grid{0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
    for (int n = 2; n <= 6; ++n) {
        const BranchTable t = branch_sweep(bare(n, 0.0, 0.0, 2), grid, 2);
        CHECK(t.branch_count[1] == 3);
        CHECK(t.branch_count[2] == (n == 2 ? 4 : n == 3 ? 5 : 6));
        for (std::size_t k = 0; k < grid.size(); ++k) {
            ModelParams p = bare(n, grid[k], 0.0, 2);
            const auto an = single_excitation_analytic(p);
            CHECK(t.energies[k][1](0) == doctest::Approx(an.e_minus).epsilon(1e-10));
            CHECK(t.energies[k][1](2) == doctest::Approx(an.e_plus).epsilon(1e-10));
        }
    }
    ModelParams driven = bare(3, 0.0, 0.0);
    driven.omega = 0.1;
    CHECK_THROWS_AS(branch_sweep(driven, grid, 2), ContractViolation);
}

TEST_CASE("two-atom middle branch at phi = pi") {
    const ModelParams p = bare(2, kPi, 0.0, 4);
    const HilbertSpace s = space_for(p);
    const DressedPair d2 = middle_branch_dressed_states(p, 2);
    CHECK(std::abs(d2.minus(s.index(2, 0, 0)) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(d2.minus(s.index(0, 1, 1)) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(middle_branch_dressed_states(bare(3, kPi, 0.0), 2), ContractViolation);
    CHECK_THROWS_AS(middle_branch_dressed_states(bare(2, 0.0, 0.0), 2), ContractViolation);
    CHECK_THROWS_AS(middle_branch_dressed_states(p, 1), ParameterError);
    CHECK_THROWS_AS(middle_branch_dressed_states(p, 5), ParameterError);

    for (int n : {2, 3, 4}) {
        const SectorSpectrum sp = sector(p, n);
        const DenseMatrix zero = eigenspace_at(sp, 0.0, 1e-9);
        CHECK(zero.cols() == 2);
        const DressedPair d = middle_branch_dressed_states(p, n);
        CHECK(subspace_fidelity(d.plus, zero) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(subspace_fidelity(middle_branch_exact_minus(p, n), zero) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("equal-weight minus state is only the large-n limit of the zero-energy partner") {
    // overlap with the exact partner is (sqrt(n-1) + sqrt(n))² / (2 (2n-1))
    const ModelParams p = bare(2, kPi, 0.0, 6);
    for (int n : {2, 3, 6}) {
        const SectorSpectrum sp = sector(p, n);
        const double f = subspace_fidelity(middle_branch_dressed_states(p, n).minus,
                                           eigenspace_at(sp, 0.0, 1e-9));
        const double expect = std::pow(std::sqrt(n - 1.0) + std::sqrt(double(n)), 2) / (2 * (2 * n - 1.0));
        CHECK(f == doctest::Approx(expect).epsilon(1e-12));
        CHECK(f < 0.999);
    }
}

TEST_CASE("rabi splitting examples") {
    ModelParams p = bare(5, 0.0, 0.0);
    CHECK(vacuum_rabi_splitting(p).plus == doctest::Approx(10 * std::sqrt(5.0)));
    p = bare(4, kPi / 2, 0.0);
    CHECK(vacuum_rabi_splitting(p).plus == doctest::Approx(10 * std::sqrt(2.0)));
    p = bare(1, 1.0, 0.0);
    CHECK(vacuum_rabi_splitting(p).plus == doctest::Approx(10.0));
    CHECK(vacuum_rabi_splitting(p).minus == doctest::Approx(-10.0));
}
