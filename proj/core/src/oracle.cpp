// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/oracle.hpp"

#include "cavarray/dynamics.hpp"
#include "cavarray/errors.hpp"

#include <Eigen/SparseLU>

#include <bit>
#include <cmath>
#include <string>

namespace cavarray {

namespace {

FullSpace guarded(const ModelParams& p, int cap, const char* who) {
    if (p.atoms > cap) {
        throw ResourceError(std::string(who) + ": per-site space limited to N <= " +
                            std::to_string(cap));
    }
    return {p.atoms, p.n_max};
}

SparseMatrix photon_lowering(int n_max) {
    SparseMatrix a(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        a.insert(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

// Spin-only operator from a per-bitstring map.
template <class Fn>
SparseMatrix spin_op(const FullSpace& s, Fn&& entries) {
    std::vector<Eigen::Triplet<Complex>> t;
    for (Index bits = 0; bits < s.spin_dim(); ++bits) {
        entries(bits, t);
    }
    SparseMatrix m(s.spin_dim(), s.spin_dim());
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

SparseMatrix sigma_minus(const FullSpace& s, int site) {
    const Index mask = Index(1) << (site - 1);
    return spin_op(s, [&](Index bits, auto& t) {
        if (bits & mask) {
            t.emplace_back(bits & ~mask, bits, 1.0);
        }
    });
}

SparseMatrix sigma_z(const FullSpace& s, int site) {
    const Index mask = Index(1) << (site - 1);
    return spin_op(s, [&](Index bits, auto& t) { t.emplace_back(bits, bits, (bits & mask) ? 1.0 : -1.0); });
}

SparseMatrix lowering_sum(const FullSpace& s, Sublattice sub) {
    SparseMatrix m(s.spin_dim(), s.spin_dim());
    for (int j = 1; j <= s.atoms; ++j) {
        if (site_sublattice(j) == sub) {
            m += sigma_minus(s, j);
        }
    }
    return m;
}

SparseMatrix photon_only(const FullSpace& s, const SparseMatrix& photon) {
    return kron(photon, sparse_identity(s.spin_dim()));
}

SparseMatrix spin_only(const FullSpace& s, const SparseMatrix& spin) {
    return kron(sparse_identity(s.n_max + 1), spin);
}

}  // namespace

FullSpace full_space(const ModelParams& params) {
    return guarded(validated(params), kOracleMaxAtoms, "full_space");
}

FullOperator full_annihilation(const FullSpace& space) {
    return {space, photon_only(space, photon_lowering(space.n_max))};
}

FullOperator full_sigma_z(const FullSpace& space, int site) {
    if (site < 1 || site > space.atoms) {
        throw ParameterError("full_sigma_z: site outside [1, N]");
    }
    return {space, spin_only(space, sigma_z(space, site))};
}

FullOperator full_collective_lowering(const FullSpace& space, Sublattice sublattice) {
    return {space, spin_only(space, lowering_sum(space, sublattice))};
}

FullOperator full_excitation(const FullSpace& space) {
    SparseMatrix sz(space.spin_dim(), space.spin_dim());
    for (int j = 1; j <= space.atoms; ++j) {
        sz += sigma_z(space, j);
    }
    const SparseMatrix a = photon_lowering(space.n_max);
    const SparseMatrix num = SparseMatrix(a.adjoint()) * a;
    SparseMatrix out = photon_only(space, num) + 0.5 * spin_only(space, sz);
    return {space, out};
}

FullOperator full_hamiltonian(const ModelParams& params) {
    const ModelParams p = validated(params);
    const FullSpace s = guarded(p, kOracleMaxAtoms, "full_hamiltonian");

    SparseMatrix sz(s.spin_dim(), s.spin_dim());
    SparseMatrix sx(s.spin_dim(), s.spin_dim());
    for (int j = 1; j <= s.atoms; ++j) {
        const SparseMatrix sm = sigma_minus(s, j);
        sz += sigma_z(s, j);
        sx += sm + SparseMatrix(sm.adjoint());
    }
    const SparseMatrix lower =
        lowering_sum(s, Sublattice::A) + std::cos(p.phi) * lowering_sum(s, Sublattice::B);
    const SparseMatrix a = photon_lowering(s.n_max);
    const SparseMatrix ad = a.adjoint();
    const SparseMatrix coupling = kron(ad, lower);

    SparseMatrix h = p.delta * photon_only(s, ad * a) + (0.5 * p.delta) * spin_only(s, sz) +
                     (0.5 * p.omega) * spin_only(s, sx);
    h += p.g * (coupling + SparseMatrix(coupling.adjoint()));
    h.prune(kStructuralZero, 1.0);
    return {s, h};
}

SparseMatrix full_liouvillian(const ModelParams& params) {
    const ModelParams p = validated(params);
    const FullOperator h = full_hamiltonian(p);
    const FullSpace& s = h.space;
    const auto [n_a, n_b] = sublattice_sizes(p.atoms);
    std::vector<Dissipator> diss{{p.kappa, full_annihilation(s).matrix}};
    if (n_a > 0) {
        diss.push_back({p.gamma / n_a, full_collective_lowering(s, Sublattice::A).matrix});
    }
    if (n_b > 0) {
        diss.push_back({p.gamma / n_b, full_collective_lowering(s, Sublattice::B).matrix});
    }
    return lindblad_generator(h.matrix, diss);
}

DenseMatrix collective_embedding(const FullSpace& space) {
    const auto [n_a, n_b] = sublattice_sizes(space.atoms);
    const HilbertSpace coll = make_space(space.n_max, n_a, n_b);
    Index mask_a = 0;
    for (int j = 1; j <= space.atoms; j += 2) {
        mask_a |= Index(1) << (j - 1);
    }
    DenseMatrix v = DenseMatrix::Zero(space.dim(), coll.dim());
    // Dicke state = equal-weight sum over bitstrings with the given counts.
    Eigen::MatrixXd count(n_a + 1, n_b + 1);
    count.setZero();
    for (Index bits = 0; bits < space.spin_dim(); ++bits) {
        count(std::popcount(static_cast<unsigned>(bits & mask_a)),
              std::popcount(static_cast<unsigned>(bits & ~mask_a)))++;
    }
    for (int n = 0; n <= space.n_max; ++n) {
        for (Index bits = 0; bits < space.spin_dim(); ++bits) {
            const int ea = std::popcount(static_cast<unsigned>(bits & mask_a));
            const int eb = std::popcount(static_cast<unsigned>(bits & ~mask_a));
            v(n * space.spin_dim() + bits, coll.index(n, ea, eb)) = 1.0 / std::sqrt(count(ea, eb));
        }
    }
    return v;
}

DenseMatrix full_steady_state(const ModelParams& params) {
    const ModelParams p = validated(params);
    const FullSpace s = guarded(p, kOracleMaxSteadyAtoms, "full_steady_state");
    const SparseMatrix l = full_liouvillian(p);
    const Index d = s.dim();

    // (L - σ)x_{k+1} = -σ x_k; each pass damps a decaying mode by σ/|σ - λ|.
    // The per-site generator has extra stationary states outside the symmetric
    // sector, and roundoff along them grows like 1/σ, so σ stays moderate and
    // the passes repeat until the iterate stops moving.
    constexpr double sigma = 1e-3;
    constexpr int max_passes = 400;
    SparseMatrix shifted = l - sigma * sparse_identity(d * d);
    shifted.makeCompressed();
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(shifted);
    if (lu.info() != Eigen::Success) {
        throw SolverError("full_steady_state: factorization failed", {});
    }
    DenseMatrix rho0 = DenseMatrix::Zero(d, d);
    rho0(0, 0) = 1.0;
    DenseVector x = vectorize(rho0);
    std::vector<double> history;
    for (int k = 0; k < max_passes; ++k) {
        DenseVector next = lu.solve(DenseVector(-sigma * x));
        next /= unvectorize(next, d).trace();
        history.push_back((next - x).norm());
        x = std::move(next);
        if (history.back() < 1e-15) {
            break;
        }
    }
    if (history.back() > 1e-12) {
        throw SolverError("full_steady_state: resolvent passes did not settle", history);
    }
    DenseMatrix rho = hermitian_part(unvectorize(x, d));
    return rho / rho.trace();
}

FullObservables full_observables(const FullSpace& space, const DenseMatrix& rho) {
    const SparseMatrix a = full_annihilation(space).matrix;
    const SparseMatrix ad = a.adjoint();
    FullObservables out;
    out.n_s = trace_product(ad * a, rho).real();
    const double m2 = trace_product(ad * ad * a * a, rho).real();
    out.g1_2_zero = out.n_s > 1e-14 ? m2 / (out.n_s * out.n_s) : std::nan("");

    const Index sd = space.spin_dim();
    if (out.n_s > 1e-12) {
        for (int q = 0; q <= space.n_max; ++q) {
            double pop = 0.0;
            for (Index b = 0; b < sd; ++b) {
                pop += rho(q * sd + b, q * sd + b).real();
            }
            out.p_q.push_back(q * pop / out.n_s);
        }
    }

    std::vector<SparseMatrix> sz;
    for (int j = 1; j <= space.atoms; ++j) {
        sz.push_back(full_sigma_z(space, j).matrix);
        out.sigma_z.push_back(trace_product(sz.back(), rho).real());
    }
    out.c_z.resize(space.atoms, space.atoms);
    for (int i = 0; i < space.atoms; ++i) {
        for (int j = 0; j < space.atoms; ++j) {
            const double pair = trace_product(sz[i] * sz[j], rho).real();
            out.c_z(i, j) = pair - out.sigma_z[i] * out.sigma_z[j];
        }
    }
    return out;
}

FullObservables full_steady_observables(const ModelParams& params) {
    const ModelParams p = validated(params);
    const FullSpace s = guarded(p, kOracleMaxSteadyAtoms, "full_steady_observables");
    const DenseMatrix rho = full_steady_state(p);
    FullObservables out = full_observables(s, rho);
    out.residual = (full_liouvillian(p) * vectorize(rho)).norm();
    return out;
}

double symmetric_leakage(const ModelParams& params, double t_final, int samples) {
    const ModelParams p = validated(params);
    const FullSpace s = guarded(p, kOracleMaxAtoms, "symmetric_leakage");
    if (!(t_final > 0.0) || samples < 1) {
        throw ParameterError("symmetric_leakage: need t_final > 0 and samples >= 1");
    }
    const SparseMatrix l = full_liouvillian(p);
    const DenseMatrix v = collective_embedding(s);
    const Index d = s.dim();

    std::vector<double> times;
    for (int k = 1; k <= samples; ++k) {
        times.push_back(t_final * k / samples);
    }
    DenseMatrix rho0 = DenseMatrix::Zero(d, d);
    rho0(0, 0) = 1.0;
    double worst = 0.0;
    integrate(l, vectorize(rho0), times, 1e-11, [&](std::size_t, double, const DenseVector& x) {
        const DenseMatrix rho = unvectorize(x, d);
        const double inside = (v.adjoint() * rho * v).trace().real();
        worst = std::max(worst, std::abs(rho.trace().real() - inside));
    });
    return worst;
}

}  // namespace cavarray
