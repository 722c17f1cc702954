// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/semiclassics.hpp"

#include "cavarray/errors.hpp"

#include <cmath>
#include <complex>

namespace cavarray {

namespace {

double bright_weight(const ModelParams& p) {
    const auto [n_a, n_b] = sublattice_sizes(p.atoms);
    const double c = std::cos(p.phi);
    return n_a + n_b * c * c;
}

}  // namespace

RabiSplitting vacuum_rabi_splitting(const ModelParams& params) {
    if (params.atoms < 1) {
        throw ParameterError("vacuum_rabi_splitting: need N >= 1");
    }
    const double split = params.g * std::sqrt(bright_weight(params));
    return {split, -split};
}

double semiclassical_ns(const ModelParams& params) {
    if (params.atoms < 1) {
        throw ParameterError("semiclassical_ns: need N >= 1");
    }
    const auto [n_a, n_b] = sublattice_sizes(params.atoms);
    const double num = params.g * params.omega * (n_a + n_b * std::cos(params.phi));
    const Complex den = params.delta * Complex(params.delta, -params.kappa) -
                        params.g * params.g * bright_weight(params);
    const double den2 = std::norm(den);
    if (den2 == 0.0) {
        throw UndefinedQuantity("semiclassical_ns: resonant denominator vanishes");
    }
    return num * num / den2;
}

double reference_detuning(const ModelParams& params) {
    const RabiSplitting r = vacuum_rabi_splitting(params);
    return params.g + params.delta - (params.delta >= 0.0 ? r.plus : r.minus);
}

double order_parameter(double ns_n, double ns_ref, int atoms) {
    if (!(ns_ref > 0.0)) {
        throw UndefinedQuantity("order_parameter: reference population must be > 0");
    }
    if (atoms < 1) {
        throw ParameterError("order_parameter: need N >= 1");
    }
    return ns_n / (atoms * ns_ref);
}

ScalingFit powerlaw_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw ParameterError("powerlaw_fit: need at least three points");
    }
    Eigen::MatrixXd design(points.size(), 2);
    Eigen::VectorXd rhs(points.size());
    ScalingFit fit;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [n, ns] = points[i];
        if (!(n > 0.0) || !(ns > 0.0)) {
            throw ParameterError("powerlaw_fit: N and n_s must be positive");
        }
        design(static_cast<Index>(i), 0) = 1.0;
        design(static_cast<Index>(i), 1) = std::log(n);
        rhs(static_cast<Index>(i)) = std::log(ns);
        fit.n_range.push_back(n);
    }
    const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
    fit.amplitude = std::exp(coef(0));
    fit.exponent = coef(1);
    const Eigen::VectorXd resid = rhs - design * coef;
    const double ss_tot = (rhs.array() - rhs.mean()).square().sum();
    fit.r_squared = ss_tot > 0.0 ? 1.0 - resid.squaredNorm() / ss_tot : 1.0;
    return fit;
}

}  // namespace cavarray
