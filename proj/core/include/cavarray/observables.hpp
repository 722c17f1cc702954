// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// observables.hpp: photon statistics, delayed correlations and per-site spin
// observables reconstructed from the collective state.

#pragma once

#include "cavarray/dynamics.hpp"

#include <map>
#include <vector>

namespace cavarray {

// Below this a factorial moment counts as "no light".
inline constexpr double kMomentFloor = 1e-14;

// Photon-number populations P(q), q = 0..n_max.
RealVector photon_populations(const DensityMatrix& rho);

// tr(a†a ρ)
double photon_number(const DensityMatrix& rho);

// <a†^m a^m> = Σ_q P(q) q!/(q-m)!
double factorial_moment(const DensityMatrix& rho, int m);

// p(q) = q P(q) / n_s. Throws UndefinedQuantity when n_s <= 1e-12.
std::vector<double> photon_distribution(const DensityMatrix& rho);

// g_n^(k)(0) = <a†^{nk} a^{nk}> / <a†^n a^n>^k. Requires n k <= n_max.
double equal_time_correlation(const DensityMatrix& rho, int n, int k);

struct PhotonStats {
    double n_s = 0.0;
    std::vector<double> p_q;          // empty when n_s is too small to normalize
    double g1_2_zero = 0.0;
    std::map<int, double> g_n_2_zero;  // bundle order -> g_n^(2)(0)
};

// Collects the equal-time quantities. Orders with 2n > n_max are skipped; a
// correlation whose denominator vanishes is reported as NaN.
PhotonStats photon_stats(const DensityMatrix& rho, const std::vector<int>& bundle_orders);

// 2 for N <= 3, otherwise the largest even number <= N.
int default_bundle_order(int atoms);

// 200 delays on [0, 50]: 0, 99 log-spaced points on [0.01, 1], 100 evenly spaced on (1, 50].
std::vector<double> default_tau_grid();

struct CorrelationTrace {
    std::vector<double> tau_grid;
    std::vector<double> g1;
    std::map<int, std::vector<double>> gn;
};

// g^(2)(τ) of photons (order 1) and of n-photon bundles (order n) from the
// regression formula: the conditioned state a^n ρ a†^n is propagated once across
// the ascending grid. Requires 2n <= n_max.
CorrelationTrace delayed_g2(const DensityMatrix& rho_ss, const SuperOperator& l, int n,
                            const std::vector<double>& tau_grid,
                            double tol = kDefaultPropagationTol);

// One order only: g_n^(2)(τ) on the grid.
std::vector<double> delayed_order(const DensityMatrix& rho_ss, const SuperOperator& l, int n,
                                  const std::vector<double>& tau_grid, double tol);

struct SpinProfile {
    std::vector<double> sigma_z;  // sites 1..N
    Eigen::MatrixXd c_z;          // connected <σz_i σz_j>
};

// Diagonal collective moments of the spin state.
struct SpinMoments {
    double jz_a = 0.0;
    double jz_b = 0.0;
    double jz_a2 = 0.0;
    double jz_b2 = 0.0;
    double jz_ab = 0.0;
};
SpinMoments spin_moments(const DensityMatrix& rho);

// Per-site <σz_j> and connected correlations, with odd sites on A and even on B.
SpinProfile spin_profile(const DensityMatrix& rho);

}  // namespace cavarray
