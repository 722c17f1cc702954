// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// semiclassics.hpp: linear-response cavity population, polariton resonances,
// the superradiance order parameter and log-log power-law fits.

#pragma once

#include "cavarray/model.hpp"

#include <utility>
#include <vector>

namespace cavarray {

struct RabiSplitting {
    double plus = 0.0;   // +g sqrt(N_A + N_B cos²φ)
    double minus = 0.0;
};

RabiSplitting vacuum_rabi_splitting(const ModelParams& params);

// n_s = |gΩ(N_A + N_B cos φ)|² / |Δ(Δ - iκ) - g²(N_A + N_B cos²φ)|²
// Throws UndefinedQuantity when the denominator vanishes.
double semiclassical_ns(const ModelParams& params);

// Detuning of the single-atom reference point: g + Δ - Δ1+ for Δ >= 0,
// g + Δ - Δ1- otherwise.
double reference_detuning(const ModelParams& params);

// S = ns_N / (N ns_ref). Throws UndefinedQuantity for ns_ref <= 0.
double order_parameter(double ns_n, double ns_ref, int atoms);

struct ScalingFit {
    double amplitude = 0.0;
    double exponent = 0.0;
    double r_squared = 0.0;
    std::vector<double> n_range;
};

// Unweighted least squares of log ns = log A + p log N over (N, ns) pairs.
// Needs at least three points with N > 0 and ns > 0.
ScalingFit powerlaw_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace cavarray
