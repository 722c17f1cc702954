// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cavarray/errors.hpp"
#include "cavarray/hilbert.hpp"

#include <cmath>

using namespace cavarray;

namespace {

DenseMatrix dense(const QOperator& op) { return op.dense(); }

}  // namespace

TEST_CASE("space dimension and photon-major flattening") {
    const HilbertSpace s(4, 2, 1);
    CHECK(s.dim() == 5 * 3 * 2);
    CHECK(s.spin_block() == 6);
    CHECK(s.index(0, 0, 0) == 0);
    CHECK(s.index(1, 0, 0) == 6);
    CHECK(s.index(2, 1, 1) == (2 * 3 + 1) * 2 + 1);
    for (Index i = 0; i < s.dim(); ++i) {
        const auto l = s.label(i);
        CHECK(s.index(l.photons, l.exc_a, l.exc_b) == i);
    }
}

TEST_CASE("invalid spaces are rejected") {
    CHECK_THROWS_AS(HilbertSpace(0, 1, 0), ParameterError);
    CHECK_THROWS_AS(HilbertSpace(3, 0, 0), ParameterError);
    CHECK_THROWS_AS(HilbertSpace(3, -1, 2), ParameterError);
    const HilbertSpace s(2, 1, 1);
    CHECK_THROWS_AS(s.index(3, 0, 0), ParameterError);
    CHECK_THROWS_AS(s.index(0, 2, 0), ParameterError);
}

TEST_CASE("ladder operators") {
    const HilbertSpace s(5, 1, 1);
    const QOperator a = annihilation(s);
    const QOperator ad = creation(s);
    CHECK((dense(ad) - dense(a).adjoint()).norm() == doctest::Approx(0.0));
    // [a, a†] = 1 except on the truncated top level
    const DenseMatrix c = dense(commutator(a, ad));
    for (Index i = 0; i < s.dim(); ++i) {
        const double expect = s.label(i).photons == s.n_max() ? -s.n_max() : 1.0;
        CHECK(c(i, i).real() == doctest::Approx(expect));
    }
    const DenseVector k3 = basis_ket(s, 3, 1, 0);
    const DenseVector k2 = basis_ket(s, 2, 1, 0);
    CHECK((a.matrix() * k3 - std::sqrt(3.0) * k2).norm() < 1e-14);
    CHECK((dense(number_operator(s)) - dense(ad * a)).norm() < 1e-13);
}

TEST_CASE("collective spin algebra holds on each sublattice") {
    const HilbertSpace s(1, 3, 2);
    for (Sublattice sub : {Sublattice::A, Sublattice::B}) {
        const QOperator jx = collective_spin(s, sub, SpinComponent::X);
        const QOperator jy = collective_spin(s, sub, SpinComponent::Y);
        const QOperator jz = collective_spin(s, sub, SpinComponent::Z);
        const QOperator jp = collective_spin(s, sub, SpinComponent::Plus);
        const QOperator jm = collective_spin(s, sub, SpinComponent::Minus);
        CHECK((dense(commutator(jx, jy)) - kI * dense(jz)).norm() < 1e-12);
        CHECK((dense(commutator(jp, jm)) - 2.0 * dense(jz)).norm() < 1e-12);
        CHECK(jx.hermiticity_defect() < 1e-15);
        // Casimir j(j+1)
        const double j = 0.5 * (sub == Sublattice::A ? 3 : 2);
        const DenseMatrix casimir = dense(jx * jx + jy * jy + jz * jz);
        CHECK((casimir - j * (j + 1) * DenseMatrix::Identity(s.dim(), s.dim())).norm() < 1e-12);
    }
    // spin operators of the two sublattices commute
    CHECK(dense(commutator(collective_spin(s, Sublattice::A, SpinComponent::Plus),
                           collective_spin(s, Sublattice::B, SpinComponent::Minus)))
              .norm() < 1e-14);
}

TEST_CASE("empty B sublattice gives zero operators") {
    const HilbertSpace s(2, 1, 0);
    CHECK(collective_spin(s, Sublattice::B, SpinComponent::Z).max_abs() == 0.0);
    CHECK(s.spin_dim(Sublattice::B) == 1);
}

TEST_CASE("operators from different spaces do not mix") {
    const HilbertSpace s1(2, 1, 1);
    const HilbertSpace s2(3, 1, 1);
    CHECK_THROWS_AS(annihilation(s1) + annihilation(s2), StructuralError);
    CHECK_THROWS_AS(annihilation(s1) * annihilation(s2), StructuralError);
}

TEST_CASE("density matrix invariants are enforced") {
    const HilbertSpace s(2, 1, 0);
    const Index d = s.dim();
    DenseMatrix m = DenseMatrix::Zero(d, d);
    m(0, 0) = 2.0;
    CHECK_THROWS_AS(DensityMatrix(s, m), InvalidState);
    m(0, 0) = 1.0;
    m(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix(s, m), InvalidState);
    m(1, 0) = 0.3;
    CHECK_THROWS_AS(DensityMatrix(s, m), InvalidState);  // |0.3|² > 1·0
    m = DenseMatrix::Zero(d, d);
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    CHECK_THROWS_AS(DensityMatrix(s, m), InvalidState);
    CHECK_THROWS_AS(DensityMatrix(s, DenseMatrix::Identity(d + 1, d + 1) / double(d + 1)),
                    StructuralError);

    const DensityMatrix g = DensityMatrix::ground(s);
    CHECK(g.matrix()(0, 0).real() == 1.0);
    CHECK(g.min_eigenvalue() == doctest::Approx(0.0));
}

TEST_CASE("expectation values") {
    const HilbertSpace s(3, 1, 1);
    const DensityMatrix rho = DensityMatrix::basis_state(s, 2, 1, 0);
    CHECK(expect_real(number_operator(s), rho) == doctest::Approx(2.0));
    CHECK(expect_real(collective_spin(s, Sublattice::A, SpinComponent::Z), rho) ==
          doctest::Approx(0.5));
    CHECK(expect_real(collective_spin(s, Sublattice::B, SpinComponent::Z), rho) ==
          doctest::Approx(-0.5));
    CHECK(expect_real(photon_projector(s, 2), rho) == doctest::Approx(1.0));

    DenseVector psi = basis_ket(s, 1, 0, 0) + kI * basis_ket(s, 0, 0, 0);
    psi /= psi.norm();
    const DensityMatrix mixed = DensityMatrix::pure(s, psi);
    // a is not Hermitian and <a> is imaginary here
    CHECK_THROWS_AS(expect_real(annihilation(s), mixed), StructuralError);
    CHECK(std::abs(expect(annihilation(s), mixed) - Complex(0.0, -0.5)) < 1e-14);
}

TEST_CASE("powers") {
    const HilbertSpace s(4, 1, 0);
    const QOperator a = annihilation(s);
    CHECK((dense(power(a, 0)) - DenseMatrix::Identity(s.dim(), s.dim())).norm() == 0.0);
    CHECK((dense(power(a, 3)) - dense(a * a * a)).norm() < 1e-13);
}
