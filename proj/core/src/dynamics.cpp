// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/dynamics.hpp"

#include "cavarray/errors.hpp"

#include <Eigen/KLUSupport>
#include <Eigen/UmfPackSupport>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace cavarray {

std::string to_string(SolveMethod m) {
    return m == SolveMethod::Direct ? "direct" : "evolve";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double inf_norm(const DenseVector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Largest absolute column sum; a cheap bound on the generator's spectral radius.
double one_norm(const SparseMatrix& m) {
    double best = 0.0;
    for (Index j = 0; j < m.outerSize(); ++j) {
        double col = 0.0;
        for (SparseMatrix::InnerIterator it(m, j); it; ++it) {
            col += std::abs(it.value());
        }
        best = std::max(best, col);
    }
    return best;
}

// Dormand–Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

// ------------------------------- integrator ----------------------------------

PropagationStats integrate(const SparseMatrix& generator, DenseVector v,
                           std::span<const double> checkpoints, double tol,
                           const std::function<void(std::size_t, double, const DenseVector&)>& visit) {
    if (!(tol > 0.0)) {
        throw ParameterError("integrate: tolerance must be > 0");
    }
    if (generator.rows() != v.size() || generator.cols() != v.size()) {
        throw StructuralError("integrate: generator and state sizes differ");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (!(checkpoints[i] >= 0.0) || (i > 0 && checkpoints[i] < checkpoints[i - 1])) {
            throw ParameterError("integrate: checkpoints must be ascending and >= 0");
        }
    }

    PropagationStats stats;
    const double scale = std::max(one_norm(generator), 1e-12);
    double h = 0.5 / scale;
    double t = 0.0;

    DenseVector k1 = generator * v;
    DenseVector k2, k3, k4, k5, k6, k7, tmp, next;

    for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
        const double target = checkpoints[ci];
        while (t < target) {
            const double remaining = target - t;
            const bool landing = h >= remaining;
            const double step = landing ? remaining : h;
            if (step < 1e-14 * std::max(1.0, t)) {
                std::ostringstream os;
                os << "integrate: step size underflow (h = " << step << " at t = " << t
                   << "); the generator is too stiff for the requested tolerance " << tol;
                throw SolverError(os.str());
            }

            tmp = v + step * a21 * k1;
            k2 = generator * tmp;
            tmp = v + step * (a31 * k1 + a32 * k2);
            k3 = generator * tmp;
            tmp = v + step * (a41 * k1 + a42 * k2 + a43 * k3);
            k4 = generator * tmp;
            tmp = v + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
            k5 = generator * tmp;
            tmp = v + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
            k6 = generator * tmp;
            next = v + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            k7 = generator * next;

            tmp = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double err = inf_norm(tmp) / (tol * std::max(1.0, inf_norm(next)));

            if (err <= 1.0) {
                t = landing ? target : t + step;
                v.swap(next);
                k1.swap(k7);
                ++stats.accepted;
                stats.last_step = step;
                // A step clipped to hit a checkpoint says nothing about the natural step.
                if (!landing) {
                    const double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
                    h = step * std::clamp(factor, 0.2, 5.0);
                }
            } else {
                ++stats.rejected;
                h = step * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            }
        }
        visit(ci, t, v);
    }
    return stats;
}

// --------------------------------- GMRES -------------------------------------

GmresResult gmres(const SparseMatrix& a, const DenseVector& b,
                  const std::function<DenseVector(const DenseVector&)>& precondition, double tol,
                  int restart, int max_iterations) {
    const Index n = b.size();
    const double bnorm = b.norm();
    GmresResult out{DenseVector::Zero(n), bnorm, 0, {}};
    if (bnorm == 0.0) {
        out.residual = 0.0;
        return out;
    }
    const int m = std::max(1, restart);

    DenseVector r = b;
    double beta = bnorm;
    std::vector<DenseVector> basis;
    std::vector<DenseVector> directions;
    DenseMatrix hess(m + 1, m);
    std::vector<Complex> cs(m);
    std::vector<Complex> sn(m);
    DenseVector g(m + 1);

    while (out.iterations < max_iterations) {
        basis.assign(1, r / beta);
        directions.clear();
        hess.setZero();
        g.setZero();
        g(0) = beta;
        int k = 0;
        for (; k < m && out.iterations < max_iterations; ++k) {
            directions.push_back(precondition(basis[k]));
            DenseVector w = a * directions[k];
            for (int i = 0; i <= k; ++i) {
                hess(i, k) = basis[i].dot(w);
                w -= hess(i, k) * basis[i];
            }
            // One reorthogonalization pass keeps the basis orthogonal at small residuals.
            for (int i = 0; i <= k; ++i) {
                const Complex c = basis[i].dot(w);
                hess(i, k) += c;
                w -= c * basis[i];
            }
            const double wn = w.norm();
            hess(k + 1, k) = wn;
            for (int i = 0; i < k; ++i) {
                const Complex h1 = hess(i, k);
                const Complex h2 = hess(i + 1, k);
                hess(i, k) = std::conj(cs[i]) * h1 + std::conj(sn[i]) * h2;
                hess(i + 1, k) = -sn[i] * h1 + cs[i] * h2;
            }
            const Complex hk = hess(k, k);
            const double denom = std::sqrt(std::norm(hk) + wn * wn);
            if (denom == 0.0) {
                cs[k] = 1.0;
                sn[k] = 0.0;
            } else {
                cs[k] = hk / denom;
                sn[k] = wn / denom;
            }
            hess(k, k) = std::conj(cs[k]) * hk + std::conj(sn[k]) * wn;
            hess(k + 1, k) = 0.0;
            g(k + 1) = -sn[k] * g(k);
            g(k) = std::conj(cs[k]) * g(k);
            ++out.iterations;
            if (std::abs(g(k + 1)) <= tol * bnorm || wn == 0.0) {
                ++k;
                break;
            }
            basis.push_back(w / wn);
        }

        const DenseVector y = hess.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
        for (int i = 0; i < k; ++i) {
            out.x += y(i) * directions[i];
        }
        r = b - a * out.x;
        const double previous = beta;
        beta = r.norm();
        out.history.push_back(beta);
        if (beta <= tol * bnorm || beta >= previous) {
            break;
        }
    }
    out.residual = beta;
    return out;
}

// ------------------------------ steady state ---------------------------------

SparseMatrix excitation_conserving_part(const HilbertSpace& space, const SparseMatrix& generator) {
    const Index d = space.dim();
    if (generator.rows() != d * d || generator.cols() != d * d) {
        throw StructuralError("excitation_conserving_part: generator does not act on " +
                              space.describe());
    }
    std::vector<int> exc(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        const auto l = space.label(i);
        exc[static_cast<std::size_t>(i)] = l.photons + l.exc_a + l.exc_b;
    }
    auto order = [&](Index vec_index) {
        const Index ket = vec_index % d;
        const Index bra = vec_index / d;
        return exc[static_cast<std::size_t>(ket)] - exc[static_cast<std::size_t>(bra)];
    };
    SparseMatrix out = generator;
    out.prune([&](Index row, Index col, const Complex&) { return order(row) == order(col); });
    out.makeCompressed();
    return out;
}

double steady_residual(const SuperOperator& l, const DenseMatrix& rho) {
    return (l.matrix() * vectorize(rho)).norm();
}

namespace {

// Replace row 0 (the ground-state population equation) of `m` with either the
// trace functional or a unit row.
SparseMatrix with_row_zero(const SparseMatrix& m, Index dim, bool trace_row) {
    std::vector<Eigen::Triplet<Complex>> t;
    t.reserve(static_cast<std::size_t>(m.nonZeros() + dim));
    for (Index j = 0; j < m.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(m, j); it; ++it) {
            if (it.row() != 0) {
                t.emplace_back(it.row(), it.col(), it.value());
            }
        }
    }
    if (trace_row) {
        for (Index i = 0; i < dim; ++i) {
            t.emplace_back(0, i * (dim + 1), 1.0);
        }
    } else {
        t.emplace_back(0, 0, 1.0);
    }
    SparseMatrix out(m.rows(), m.cols());
    out.setFromTriplets(t.begin(), t.end());
    out.makeCompressed();
    return out;
}

// Largest system handed to the unpreconditioned sparse LU fallback.
constexpr Index kFullLuCap = 12000;
constexpr int kGmresRestart = 60;
constexpr int kGmresMaxIterations = 3000;

DensityMatrix finalize(const HilbertSpace& space, const DenseVector& x) {
    DenseMatrix rho = hermitian_part(unvectorize(x, space.dim()));
    const Complex tr = rho.trace();
    if (std::abs(tr) == 0.0 || !std::isfinite(std::abs(tr))) {
        throw SolverError("steady_state: solution has zero or non-finite trace");
    }
    rho /= tr.real();
    return {space, std::move(rho)};
}

std::optional<DenseVector> solve_preconditioned(const SuperOperator& l, const SparseMatrix& system,
                                                const DenseVector& rhs, double tol,
                                                SolveReport& report) {
    const Index d = l.space().dim();
    SparseMatrix pre = with_row_zero(excitation_conserving_part(l.space(), l.matrix()), d, false);
    Eigen::KLU<SparseMatrix> lu;
    lu.compute(pre);
    if (lu.info() != Eigen::Success) {
        // Extra stationary states of the drive-free generator; shift them off zero.
        const double shift = 1e-6 * std::max(1.0, one_norm(l.matrix()));
        pre -= shift * sparse_identity(pre.rows());
        lu.compute(pre);
        if (lu.info() != Eigen::Success) {
            return std::nullopt;
        }
    }
    const auto apply = [&lu](const DenseVector& v) -> DenseVector { return lu.solve(v); };
    // Ask for two orders more than the caller so the renormalized state still passes.
    GmresResult res = gmres(system, rhs, apply, std::min(1e-13, 1e-2 * tol), kGmresRestart,
                            kGmresMaxIterations);
    report.iterations += res.iterations;
    report.history.insert(report.history.end(), res.history.begin(), res.history.end());
    if (!res.x.allFinite()) {
        return std::nullopt;
    }
    return res.x;
}

std::optional<DenseVector> solve_full_lu(const SparseMatrix& system, const DenseVector& rhs,
                                         SolveReport& report) {
    Eigen::UmfPackLU<SparseMatrix> lu;
    lu.compute(system);
    if (lu.info() != Eigen::Success) {
        return std::nullopt;
    }
    DenseVector x = lu.solve(rhs);
    report.history.push_back((system * x - rhs).norm());
    if (!x.allFinite()) {
        return std::nullopt;
    }
    return x;
}

}  // namespace

SteadyState steady_state_by_evolution(const SuperOperator& l, double tol, double max_time) {
    if (!(tol > 0.0)) {
        throw ParameterError("steady_state: tolerance must be > 0");
    }
    const auto start = Clock::now();
    const HilbertSpace& space = l.space();
    SolveReport report;
    report.method = SolveMethod::Evolve;

    DenseVector v = vectorize(DensityMatrix::ground(space).matrix());
    const double chunk = 10.0;
    double t = 0.0;
    const double step_tol = std::max(1e-14, 1e-3 * tol);
    // Integration error leaves a residual floor near step_tol·‖L‖; once the residual
    // stops falling below that scale, further time only burns steps.
    const double floor = tol * std::max(1.0, one_norm(l.matrix()));
    while (t < max_time) {
        const double checkpoint[] = {chunk};
        const auto stats = integrate(l.matrix(), v, checkpoint, step_tol,
                                     [&v](std::size_t, double, const DenseVector& out) { v = out; });
        report.iterations += stats.accepted;
        t += chunk;
        const double res = (l.matrix() * v).norm();
        const bool stalled = report.history.size() >= 1 && res < floor && res > 0.5 * report.history.back();
        report.history.push_back(res);
        if (stalled) {
            DensityMatrix rho = finalize(space, v);
            report.residual = steady_residual(l, rho.matrix());
            report.wall_time = seconds_since(start);
            return {std::move(rho), std::move(report)};
        }
        if (res < tol) {
            DensityMatrix rho = finalize(space, v);
            report.residual = steady_residual(l, rho.matrix());
            report.wall_time = seconds_since(start);
            if (report.residual < tol) {
                return {std::move(rho), std::move(report)};
            }
        }
    }
    throw SolverError("steady_state: evolution did not converge by t = " + std::to_string(max_time),
                      report.history);
}

SteadyState steady_state(const SuperOperator& l, double tol) {
    if (!(tol > 0.0)) {
        throw ParameterError("steady_state: tolerance must be > 0");
    }
    const auto start = Clock::now();
    const HilbertSpace& space = l.space();
    const Index d = space.dim();

    const SparseMatrix system = with_row_zero(l.matrix(), d, true);
    DenseVector rhs = DenseVector::Zero(d * d);
    rhs(0) = 1.0;

    SolveReport report;
    report.method = SolveMethod::Direct;

    auto accept = [&](const DenseVector& x) -> std::optional<SteadyState> {
        try {
            DensityMatrix rho = finalize(space, x);
            const double res = steady_residual(l, rho.matrix());
            if (res < tol) {
                report.residual = res;
                report.wall_time = seconds_since(start);
                return SteadyState{std::move(rho), report};
            }
            report.history.push_back(res);
        } catch (const InvalidState&) {
        }
        return std::nullopt;
    };

    if (auto x = solve_preconditioned(l, system, rhs, tol, report)) {
        if (auto done = accept(*x)) {
            return std::move(*done);
        }
    }
    if (d * d <= kFullLuCap) {
        if (auto x = solve_full_lu(system, rhs, report)) {
            if (auto done = accept(*x)) {
                return std::move(*done);
            }
        }
    }
    try {
        SteadyState evolved = steady_state_by_evolution(l, tol);
        evolved.report.history.insert(evolved.report.history.begin(), report.history.begin(),
                                      report.history.end());
        evolved.report.wall_time = seconds_since(start);
        return evolved;
    } catch (const SolverError& e) {
        std::vector<double> history = report.history;
        history.insert(history.end(), e.history().begin(), e.history().end());
        throw SolverError(std::string("steady_state: no method converged; ") + e.what(), history);
    }
}

// ------------------------------- propagate -----------------------------------

DensityMatrix propagate(const SuperOperator& l, const DensityMatrix& rho0, double t, double tol) {
    if (!(l.space() == rho0.space())) {
        throw StructuralError("propagate: generator and state live on different spaces");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw ParameterError("propagate: time must be finite and >= 0");
    }
    if (!(tol > 0.0)) {
        throw ParameterError("propagate: tolerance must be > 0");
    }
    if (t == 0.0) {
        return rho0;
    }
    DenseVector v;
    const double checkpoint[] = {t};
    integrate(l.matrix(), vectorize(rho0.matrix()), checkpoint, tol,
              [&v](std::size_t, double, const DenseVector& out) { v = out; });
    DenseMatrix rho = hermitian_part(unvectorize(v, l.space().dim()));
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > 1e-8) {
        throw SolverError("propagate: trace drifted by " + std::to_string(std::abs(tr - 1.0)));
    }
    rho /= tr.real();
    return {l.space(), std::move(rho)};
}

}  // namespace cavarray
