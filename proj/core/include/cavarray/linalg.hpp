// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// linalg.hpp: scalar/matrix aliases and the few sparse helpers every module uses

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>

namespace cavarray {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using SparseMatrix = Eigen::SparseMatrix<Complex>;   // column-major
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Stored entries with magnitude below this are treated as structural zeros.
inline constexpr double kStructuralZero = 1e-15;

inline constexpr Complex kI{0.0, 1.0};

// Kronecker product of two sparse matrices: (A ⊗ B)(i*rb + k, j*cb + l) = A(i,j) B(k,l).
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix sparse_identity(Index n);

// Largest entry magnitude; zero for an empty matrix.
double max_abs(const SparseMatrix& m);
double max_abs(const DenseMatrix& m);

// Column-stacking vectorization. vec(A rho B) = (B^T ⊗ A) vec(rho).
DenseVector vectorize(const DenseMatrix& rho);
DenseMatrix unvectorize(const DenseVector& v, Index dim);

// (m + m†)/2
DenseMatrix hermitian_part(const DenseMatrix& m);

}  // namespace cavarray
