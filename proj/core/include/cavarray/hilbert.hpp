// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// hilbert.hpp: Fock ⊗ collective-spin(A) ⊗ collective-spin(B) spaces and their operators
//
// Basis convention (fixed for the whole library): |n, a, b> with photon number
// n ∈ [0, n_max] and sublattice excitation counts a = m_A + N_A/2 ∈ [0, N_A],
// b = m_B + N_B/2 ∈ [0, N_B], flattened photon-major:
//
//     index = (n * (N_A + 1) + a) * (N_B + 1) + b
//
// so every photon-number block is a contiguous run of (N_A+1)(N_B+1) states.

#pragma once

#include "cavarray/linalg.hpp"

#include <string>

namespace cavarray {

enum class Sublattice { A, B };
enum class SpinComponent { X, Y, Z, Plus, Minus };

class HilbertSpace {
public:
    struct Label {
        int photons;
        int exc_a;
        int exc_b;
        bool operator==(const Label&) const = default;
    };

    // Throws ParameterError unless n_max >= 1, n_a, n_b >= 0 and n_a + n_b >= 1.
    HilbertSpace(int n_max, int n_a, int n_b);

    int n_max() const noexcept { return n_max_; }
    int n_a() const noexcept { return n_a_; }
    int n_b() const noexcept { return n_b_; }
    int atoms() const noexcept { return n_a_ + n_b_; }

    Index photon_dim() const noexcept { return n_max_ + 1; }
    Index spin_dim(Sublattice s) const noexcept {
        return (s == Sublattice::A ? n_a_ : n_b_) + 1;
    }
    Index spin_block() const noexcept { return Index(n_a_ + 1) * (n_b_ + 1); }
    Index dim() const noexcept { return photon_dim() * spin_block(); }

    Index index(int photons, int exc_a, int exc_b) const;
    Label label(Index i) const;

    std::string describe() const;

    bool operator==(const HilbertSpace&) const = default;

private:
    int n_max_;
    int n_a_;
    int n_b_;
};

HilbertSpace make_space(int n_max, int n_a, int n_b);

// Sparse operator tagged with the space it acts on. Arithmetic between operators
// on different spaces throws StructuralError.
class QOperator {
public:
    QOperator(HilbertSpace space, SparseMatrix matrix);

    static QOperator identity(const HilbertSpace& space);
    static QOperator zero(const HilbertSpace& space);

    const HilbertSpace& space() const noexcept { return space_; }
    const SparseMatrix& matrix() const noexcept { return matrix_; }
    DenseMatrix dense() const { return DenseMatrix(matrix_); }

    QOperator adjoint() const;
    // max |A - A†| entrywise
    double hermiticity_defect() const;
    double max_abs() const { return cavarray::max_abs(matrix_); }

    QOperator& operator+=(const QOperator& other);
    QOperator& operator-=(const QOperator& other);
    QOperator& operator*=(Complex s);

    friend QOperator operator+(QOperator lhs, const QOperator& rhs) { return lhs += rhs; }
    friend QOperator operator-(QOperator lhs, const QOperator& rhs) { return lhs -= rhs; }
    friend QOperator operator*(Complex s, QOperator op) { return op *= s; }
    friend QOperator operator*(QOperator op, Complex s) { return op *= s; }
    friend QOperator operator*(const QOperator& lhs, const QOperator& rhs);

private:
    void require_same_space(const QOperator& other, const char* what) const;

    HilbertSpace space_;
    SparseMatrix matrix_;
};

QOperator commutator(const QOperator& a, const QOperator& b);

// k-th power of an operator (k >= 0).
QOperator power(const QOperator& op, int k);

// â ⊗ I_A ⊗ I_B with <n-1|â|n> = sqrt(n).
QOperator annihilation(const HilbertSpace& space);
QOperator creation(const HilbertSpace& space);
QOperator number_operator(const HilbertSpace& space);

// Spin-(N_S/2) matrices for the requested sublattice, embedded with identities.
// An empty sublattice yields the zero operator on its one-dimensional factor.
QOperator collective_spin(const HilbertSpace& space, Sublattice sublattice,
                          SpinComponent component);

// Projector onto photon number q (identity on both spin factors).
QOperator photon_projector(const HilbertSpace& space, int q);

// Basis ket |n, a, b>.
DenseVector basis_ket(const HilbertSpace& space, int photons, int exc_a, int exc_b);

// Hermitian, unit-trace, positive-semidefinite matrix over a HilbertSpace.
// The constructor checks all three invariants and throws InvalidState on failure.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-8;
    static constexpr double kPositivityTol = 1e-8;

    DensityMatrix(HilbertSpace space, DenseMatrix matrix);

    static DensityMatrix pure(const HilbertSpace& space, const DenseVector& ket);
    static DensityMatrix basis_state(const HilbertSpace& space, int photons, int exc_a,
                                     int exc_b);
    // |0, 0, 0>: empty cavity, every atom in its ground state.
    static DensityMatrix ground(const HilbertSpace& space);

    const HilbertSpace& space() const noexcept { return space_; }
    const DenseMatrix& matrix() const noexcept { return matrix_; }

    double min_eigenvalue() const;

private:
    HilbertSpace space_;
    DenseMatrix matrix_;
};

// tr(op ρ)
Complex expect(const QOperator& op, const DensityMatrix& rho);
// Real part of tr(op ρ); throws StructuralError if the imaginary part exceeds
// 1e-10 · max(1, |Re|), which only happens for non-Hermitian op.
double expect_real(const QOperator& op, const DensityMatrix& rho);

// tr(op m) for an arbitrary matrix m of matching size.
Complex trace_product(const SparseMatrix& op, const DenseMatrix& m);

}  // namespace cavarray
