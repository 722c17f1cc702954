// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/observables.hpp"

#include "cavarray/errors.hpp"

#include <cmath>
#include <string>

namespace cavarray {

RealVector photon_populations(const DensityMatrix& rho) {
    const HilbertSpace& space = rho.space();
    const Index block = space.spin_block();
    RealVector pop = RealVector::Zero(space.photon_dim());
    for (Index q = 0; q < space.photon_dim(); ++q) {
        for (Index s = 0; s < block; ++s) {
            const Index i = q * block + s;
            pop(q) += rho.matrix()(i, i).real();
        }
    }
    return pop;
}

double photon_number(const DensityMatrix& rho) {
    return factorial_moment(rho, 1);
}

double factorial_moment(const DensityMatrix& rho, int m) {
    if (m < 0) {
        throw ParameterError("factorial_moment: order must be >= 0");
    }
    const RealVector pop = photon_populations(rho);
    double total = 0.0;
    for (Index q = m; q < pop.size(); ++q) {
        double falling = 1.0;
        for (int k = 0; k < m; ++k) {
            falling *= static_cast<double>(q - k);
        }
        total += falling * pop(q);
    }
    return total;
}

std::vector<double> photon_distribution(const DensityMatrix& rho) {
    const RealVector pop = photon_populations(rho);
    double ns = 0.0;
    for (Index q = 0; q < pop.size(); ++q) {
        ns += static_cast<double>(q) * pop(q);
    }
    if (!(ns > 1e-12)) {
        throw UndefinedQuantity("photon_distribution: n_s is zero, p(q) undefined");
    }
    std::vector<double> out(static_cast<std::size_t>(pop.size()));
    for (Index q = 0; q < pop.size(); ++q) {
        out[static_cast<std::size_t>(q)] = static_cast<double>(q) * pop(q) / ns;
    }
    return out;
}

double equal_time_correlation(const DensityMatrix& rho, int n, int k) {
    if (n < 1 || k < 1) {
        throw ParameterError("equal_time_correlation: n and k must be >= 1");
    }
    if (n * k > rho.space().n_max()) {
        throw ParameterError("equal_time_correlation: n*k exceeds the photon cutoff");
    }
    const double denom = factorial_moment(rho, n);
    if (!(denom > kMomentFloor)) {
        throw UndefinedQuantity("equal_time_correlation: <a†^n a^n> vanishes");
    }
    return factorial_moment(rho, n * k) / std::pow(denom, k);
}

PhotonStats photon_stats(const DensityMatrix& rho, const std::vector<int>& bundle_orders) {
    PhotonStats out;
    out.n_s = photon_number(rho);
    if (out.n_s > 1e-12) {
        out.p_q = photon_distribution(rho);
    }
    auto g2_or_nan = [&](int n) {
        return factorial_moment(rho, n) > kMomentFloor ? equal_time_correlation(rho, n, 2)
                                                       : std::nan("");
    };
    out.g1_2_zero = g2_or_nan(1);
    for (int n : bundle_orders) {
        if (2 * n <= rho.space().n_max()) {
            out.g_n_2_zero[n] = g2_or_nan(n);
        }
    }
    return out;
}

int default_bundle_order(int atoms) {
    if (atoms <= 3) {
        return 2;
    }
    return atoms - atoms % 2;
}

std::vector<double> default_tau_grid() {
    std::vector<double> grid;
    grid.reserve(200);
    grid.push_back(0.0);
    for (int i = 0; i < 99; ++i) {
        grid.push_back(std::pow(10.0, -2.0 + 2.0 * i / 98.0));
    }
    for (int i = 1; i <= 100; ++i) {
        grid.push_back(1.0 + 49.0 * i / 100.0);
    }
    return grid;
}

// --------------------------- delayed correlations ----------------------------

std::vector<double> delayed_order(const DensityMatrix& rho_ss, const SuperOperator& l, int n,
                                  const std::vector<double>& tau_grid, double tol) {
    const HilbertSpace& space = rho_ss.space();
    if (!(space == l.space())) {
        throw StructuralError("delayed_g2: state and generator live on different spaces");
    }
    if (n < 1 || 2 * n > space.n_max()) {
        throw ParameterError("delayed_g2: need 1 <= n and 2n <= n_max");
    }
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] >= 0.0) || (i > 0 && tau_grid[i] < tau_grid[i - 1])) {
            throw ParameterError("delayed_g2: tau grid must be ascending and >= 0");
        }
    }
    const double moment = factorial_moment(rho_ss, n);
    if (!(moment > kMomentFloor)) {
        throw UndefinedQuantity("delayed_g2: <a†^n a^n> vanishes");
    }

    const SparseMatrix an = power(annihilation(space), n).matrix();
    const SparseMatrix adn_an = SparseMatrix(an.adjoint()) * an;
    // Conditioned state, normalized so that its trace is one.
    const DenseMatrix conditioned = (an * rho_ss.matrix() * SparseMatrix(an.adjoint())) / moment;

    std::vector<double> out(tau_grid.size());
    integrate(l.matrix(), vectorize(conditioned), tau_grid, tol,
              [&](std::size_t idx, double, const DenseVector& v) {
                  const DenseMatrix m = unvectorize(v, space.dim());
                  out[idx] = trace_product(adn_an, m).real() / moment;
              });
    return out;
}

CorrelationTrace delayed_g2(const DensityMatrix& rho_ss, const SuperOperator& l, int n,
                            const std::vector<double>& tau_grid, double tol) {
    CorrelationTrace trace;
    trace.tau_grid = tau_grid;
    trace.g1 = delayed_order(rho_ss, l, 1, tau_grid, tol);
    trace.gn[n] = n == 1 ? trace.g1 : delayed_order(rho_ss, l, n, tau_grid, tol);
    return trace;
}

// ------------------------------- spin profile --------------------------------

SpinMoments spin_moments(const DensityMatrix& rho) {
    const HilbertSpace& space = rho.space();
    const double half_a = 0.5 * space.n_a();
    const double half_b = 0.5 * space.n_b();
    SpinMoments m;
    for (Index i = 0; i < space.dim(); ++i) {
        const double p = rho.matrix()(i, i).real();
        const auto label = space.label(i);
        const double za = label.exc_a - half_a;
        const double zb = label.exc_b - half_b;
        m.jz_a += p * za;
        m.jz_b += p * zb;
        m.jz_a2 += p * za * za;
        m.jz_b2 += p * zb * zb;
        m.jz_ab += p * za * zb;
    }
    return m;
}

SpinProfile spin_profile(const DensityMatrix& rho) {
    const HilbertSpace& space = rho.space();
    const int atoms = space.atoms();
    const SpinMoments m = spin_moments(rho);
    const double n_a = space.n_a();
    const double n_b = space.n_b();

    auto site_mean = [&](Sublattice s) {
        return s == Sublattice::A ? 2.0 * m.jz_a / n_a : 2.0 * m.jz_b / n_b;
    };
    auto pair_same = [&](Sublattice s) {
        const double ns = s == Sublattice::A ? n_a : n_b;
        if (ns <= 1) {
            throw UndefinedQuantity("spin_profile: sublattice has no pair of distinct sites");
        }
        const double jz2 = s == Sublattice::A ? m.jz_a2 : m.jz_b2;
        return (4.0 * jz2 - ns) / (ns * (ns - 1.0));
    };

    SpinProfile out;
    out.sigma_z.resize(static_cast<std::size_t>(atoms));
    for (int j = 1; j <= atoms; ++j) {
        out.sigma_z[static_cast<std::size_t>(j - 1)] = site_mean(site_sublattice(j));
    }
    out.c_z = Eigen::MatrixXd::Zero(atoms, atoms);
    for (int i = 1; i <= atoms; ++i) {
        for (int j = 1; j <= atoms; ++j) {
            const Sublattice si = site_sublattice(i);
            const Sublattice sj = site_sublattice(j);
            double pair = 1.0;
            if (i != j) {
                pair = si == sj ? pair_same(si) : 4.0 * m.jz_ab / (n_a * n_b);
            }
            out.c_z(i - 1, j - 1) = pair - out.sigma_z[static_cast<std::size_t>(i - 1)] *
                                               out.sigma_z[static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

}  // namespace cavarray
