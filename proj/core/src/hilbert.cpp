// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/hilbert.hpp"

#include "cavarray/errors.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace cavarray {

// ------------------------------- HilbertSpace -------------------------------

HilbertSpace::HilbertSpace(int n_max, int n_a, int n_b) : n_max_(n_max), n_a_(n_a), n_b_(n_b) {
    if (n_max < 1) {
        throw ParameterError("HilbertSpace: photon cutoff n_max must be >= 1, got " +
                             std::to_string(n_max));
    }
    if (n_a < 0 || n_b < 0 || n_a + n_b < 1) {
        throw ParameterError("HilbertSpace: sublattice sizes must be >= 0 with at least one atom");
    }
}

Index HilbertSpace::index(int photons, int exc_a, int exc_b) const {
    if (photons < 0 || photons > n_max_ || exc_a < 0 || exc_a > n_a_ || exc_b < 0 ||
        exc_b > n_b_) {
        throw ParameterError("HilbertSpace::index: label out of range");
    }
    return (Index(photons) * (n_a_ + 1) + exc_a) * (n_b_ + 1) + exc_b;
}

HilbertSpace::Label HilbertSpace::label(Index i) const {
    if (i < 0 || i >= dim()) {
        throw ParameterError("HilbertSpace::label: index out of range");
    }
    const auto b = static_cast<int>(i % (n_b_ + 1));
    const Index rest = i / (n_b_ + 1);
    const auto a = static_cast<int>(rest % (n_a_ + 1));
    const auto n = static_cast<int>(rest / (n_a_ + 1));
    return {n, a, b};
}

std::string HilbertSpace::describe() const {
    std::ostringstream os;
    os << "Fock(" << n_max_ << ") x J_A(" << n_a_ << "/2) x J_B(" << n_b_ << "/2), dim " << dim();
    return os.str();
}

HilbertSpace make_space(int n_max, int n_a, int n_b) {
    return HilbertSpace(n_max, n_a, n_b);
}

// -------------------------------- QOperator ---------------------------------

QOperator::QOperator(HilbertSpace space, SparseMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
        throw StructuralError("QOperator: matrix shape does not match " + space_.describe());
    }
    matrix_.prune(kStructuralZero, 1.0);
    matrix_.makeCompressed();
}

QOperator QOperator::identity(const HilbertSpace& space) {
    return {space, sparse_identity(space.dim())};
}

QOperator QOperator::zero(const HilbertSpace& space) {
    return {space, SparseMatrix(space.dim(), space.dim())};
}

QOperator QOperator::adjoint() const {
    return {space_, SparseMatrix(matrix_.adjoint())};
}

double QOperator::hermiticity_defect() const {
    return cavarray::max_abs(SparseMatrix(matrix_ - SparseMatrix(matrix_.adjoint())));
}

void QOperator::require_same_space(const QOperator& other, const char* what) const {
    if (!(space_ == other.space_)) {
        throw StructuralError(std::string("QOperator ") + what + ": operands live on different spaces (" +
                              space_.describe() + " vs " + other.space_.describe() + ")");
    }
}

QOperator& QOperator::operator+=(const QOperator& other) {
    require_same_space(other, "+");
    matrix_ += other.matrix_;
    matrix_.prune(kStructuralZero, 1.0);
    return *this;
}

QOperator& QOperator::operator-=(const QOperator& other) {
    require_same_space(other, "-");
    matrix_ -= other.matrix_;
    matrix_.prune(kStructuralZero, 1.0);
    return *this;
}

QOperator& QOperator::operator*=(Complex s) {
    matrix_ *= s;
    matrix_.prune(kStructuralZero, 1.0);
    return *this;
}

QOperator operator*(const QOperator& lhs, const QOperator& rhs) {
    lhs.require_same_space(rhs, "*");
    return {lhs.space_, SparseMatrix(lhs.matrix_ * rhs.matrix_)};
}

QOperator commutator(const QOperator& a, const QOperator& b) {
    return a * b - b * a;
}

QOperator power(const QOperator& op, int k) {
    if (k < 0) {
        throw ParameterError("power: exponent must be >= 0");
    }
    QOperator out = QOperator::identity(op.space());
    for (int i = 0; i < k; ++i) {
        out = out * op;
    }
    return out;
}

// ----------------------------- elementary operators -------------------------

namespace {

// Embed a single-factor operator into photon ⊗ A ⊗ B.
enum class Factor { Photon, SpinA, SpinB };

SparseMatrix embed(const HilbertSpace& space, const SparseMatrix& local, Factor factor) {
    const SparseMatrix id_photon = sparse_identity(space.photon_dim());
    const SparseMatrix id_a = sparse_identity(space.spin_dim(Sublattice::A));
    const SparseMatrix id_b = sparse_identity(space.spin_dim(Sublattice::B));
    switch (factor) {
        case Factor::Photon:
            return kron(kron(local, id_a), id_b);
        case Factor::SpinA:
            return kron(kron(id_photon, local), id_b);
        case Factor::SpinB:
            break;
    }
    return kron(kron(id_photon, id_a), local);
}

SparseMatrix local_annihilation(int n_max) {
    std::vector<Eigen::Triplet<Complex>> t;
    for (int n = 1; n <= n_max; ++n) {
        t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
    }
    SparseMatrix m(n_max + 1, n_max + 1);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

// Spin j = atoms/2 in the excitation-count basis k = m + j.
SparseMatrix local_spin(int atoms, SpinComponent component) {
    const Index d = atoms + 1;
    SparseMatrix raise(d, d);
    SparseMatrix jz(d, d);
    {
        std::vector<Eigen::Triplet<Complex>> tr;
        std::vector<Eigen::Triplet<Complex>> tz;
        for (int k = 0; k <= atoms; ++k) {
            const double m = k - 0.5 * atoms;
            if (m != 0.0) {
                tz.emplace_back(k, k, m);
            }
            if (k < atoms) {
                tr.emplace_back(k + 1, k, std::sqrt(static_cast<double>((k + 1) * (atoms - k))));
            }
        }
        raise.setFromTriplets(tr.begin(), tr.end());
        jz.setFromTriplets(tz.begin(), tz.end());
    }
    const SparseMatrix lower = raise.adjoint();
    switch (component) {
        case SpinComponent::Plus:
            return raise;
        case SpinComponent::Minus:
            return lower;
        case SpinComponent::Z:
            return jz;
        case SpinComponent::X:
            return 0.5 * (raise + lower);
        case SpinComponent::Y:
            break;
    }
    return Complex(0.0, -0.5) * (raise - lower);
}

}  // namespace

QOperator annihilation(const HilbertSpace& space) {
    return {space, embed(space, local_annihilation(space.n_max()), Factor::Photon)};
}

QOperator creation(const HilbertSpace& space) {
    return annihilation(space).adjoint();
}

QOperator number_operator(const HilbertSpace& space) {
    return creation(space) * annihilation(space);
}

QOperator collective_spin(const HilbertSpace& space, Sublattice sublattice,
                          SpinComponent component) {
    const bool is_a = sublattice == Sublattice::A;
    const int atoms = is_a ? space.n_a() : space.n_b();
    return {space, embed(space, local_spin(atoms, component), is_a ? Factor::SpinA : Factor::SpinB)};
}

QOperator photon_projector(const HilbertSpace& space, int q) {
    if (q < 0 || q > space.n_max()) {
        throw ParameterError("photon_projector: q outside [0, n_max]");
    }
    SparseMatrix local(space.photon_dim(), space.photon_dim());
    local.insert(q, q) = 1.0;
    return {space, embed(space, local, Factor::Photon)};
}

DenseVector basis_ket(const HilbertSpace& space, int photons, int exc_a, int exc_b) {
    DenseVector ket = DenseVector::Zero(space.dim());
    ket(space.index(photons, exc_a, exc_b)) = 1.0;
    return ket;
}

// ------------------------------- DensityMatrix ------------------------------

DensityMatrix::DensityMatrix(HilbertSpace space, DenseMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
        throw StructuralError("DensityMatrix: shape does not match " + space_.describe());
    }
    const double herm = cavarray::max_abs(DenseMatrix(matrix_ - matrix_.adjoint()));
    if (herm > kHermitianTol) {
        throw InvalidState("DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw InvalidState("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
    }
    const double lo = min_eigenvalue();
    if (lo < -kPositivityTol) {
        throw InvalidState("DensityMatrix: negative eigenvalue " + std::to_string(lo));
    }
}

DensityMatrix DensityMatrix::pure(const HilbertSpace& space, const DenseVector& ket) {
    const double norm = ket.norm();
    if (norm == 0.0) {
        throw InvalidState("DensityMatrix::pure: zero vector");
    }
    const DenseVector k = ket / norm;
    return {space, k * k.adjoint()};
}

DensityMatrix DensityMatrix::basis_state(const HilbertSpace& space, int photons, int exc_a,
                                         int exc_b) {
    return pure(space, basis_ket(space, photons, exc_a, exc_b));
}

DensityMatrix DensityMatrix::ground(const HilbertSpace& space) {
    return basis_state(space, 0, 0, 0);
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(hermitian_part(matrix_), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// --------------------------------- expect -----------------------------------

Complex trace_product(const SparseMatrix& op, const DenseMatrix& m) {
    if (op.rows() != m.cols() || op.cols() != m.rows()) {
        throw StructuralError("trace_product: shape mismatch");
    }
    Complex acc = 0.0;
    for (Index j = 0; j < op.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(op, j); it; ++it) {
            acc += it.value() * m(it.col(), it.row());
        }
    }
    return acc;
}

Complex expect(const QOperator& op, const DensityMatrix& rho) {
    if (!(op.space() == rho.space())) {
        throw StructuralError("expect: operator and state live on different spaces");
    }
    return trace_product(op.matrix(), rho.matrix());
}

double expect_real(const QOperator& op, const DensityMatrix& rho) {
    const Complex v = expect(op, rho);
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
        throw StructuralError("expect_real: expectation has imaginary part " +
                              std::to_string(v.imag()));
    }
    return v.real();
}

}  // namespace cavarray
