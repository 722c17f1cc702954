// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/linalg.hpp"

#include <algorithm>
#include <vector>

namespace cavarray {

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    const Index rb = b.rows();
    const Index cb = b.cols();
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (Index ja = 0; ja < a.outerSize(); ++ja) {
        for (SparseMatrix::InnerIterator ia(a, ja); ia; ++ia) {
            for (Index jb = 0; jb < b.outerSize(); ++jb) {
                for (SparseMatrix::InnerIterator ib(b, jb); ib; ++ib) {
                    triplets.emplace_back(ia.row() * rb + ib.row(), ja * cb + ib.col(),
                                          ia.value() * ib.value());
                }
            }
        }
    }
    SparseMatrix out(a.rows() * rb, a.cols() * cb);
    out.setFromTriplets(triplets.begin(), triplets.end());
    out.prune(kStructuralZero, 1.0);
    return out;
}

SparseMatrix sparse_identity(Index n) {
    SparseMatrix id(n, n);
    id.setIdentity();
    return id;
}

double max_abs(const SparseMatrix& m) {
    double out = 0.0;
    for (Index j = 0; j < m.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(m, j); it; ++it) {
            out = std::max(out, std::abs(it.value()));
        }
    }
    return out;
}

double max_abs(const DenseMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

DenseVector vectorize(const DenseMatrix& rho) {
    return Eigen::Map<const DenseVector>(rho.data(), rho.size());
}

DenseMatrix unvectorize(const DenseVector& v, Index dim) {
    return Eigen::Map<const DenseMatrix>(v.data(), dim, dim);
}

DenseMatrix hermitian_part(const DenseMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

}  // namespace cavarray
