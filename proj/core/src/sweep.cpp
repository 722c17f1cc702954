// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "cavarray/sweep.hpp"

#include "cavarray/errors.hpp"
#include "cavarray/parallel.hpp"
#include "cavarray/semiclassics.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#ifndef CAVARRAY_VERSION
#define CAVARRAY_VERSION "0.0.0"
#endif

namespace cavarray {

using nlohmann::json;

std::string version_string() {
    return CAVARRAY_VERSION;
}

// ------------------------------- cutoff search -------------------------------

namespace {

struct CutoffProbe {
    SteadyState steady;
    RealVector populations;
    double n_s;
    double g1;
    double gn;
};

CutoffProbe probe(const ModelParams& params, int n_max, int bundle_order, double tol) {
    ModelParams p = params;
    p.n_max = n_max;
    const HilbertSpace space = space_for(p);
    SteadyState ss = steady_state(build_liouvillian(p, space), tol);
    const PhotonStats stats = photon_stats(ss.rho, {bundle_order});
    const auto gn = stats.g_n_2_zero.find(bundle_order);
    RealVector populations = photon_populations(ss.rho);
    return {std::move(ss), std::move(populations), stats.n_s, stats.g1_2_zero,
            gn == stats.g_n_2_zero.end() ? std::nan("") : gn->second};
}

// Relative change below the gate; undefined values on both sides count as stable.
bool stable(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) {
        return true;
    }
    return std::abs(a - b) <= kCutoffStability * std::abs(b);
}

}  // namespace

CutoffResult resolve_cutoff(const ModelParams& params, int bundle_order, double tol, int cap) {
    if (bundle_order < 1) {
        throw ParameterError("auto_cutoff: bundle order must be >= 1");
    }
    const int floor = std::max(2 * bundle_order, 6);
    if (floor + 2 > cap) {
        throw ResourceError("auto_cutoff: bundle order " + std::to_string(bundle_order) +
                            " needs n_max >= " + std::to_string(floor) + ", cap is " +
                            std::to_string(cap));
    }
    std::map<int, CutoffProbe> probes;
    auto at = [&](int n) -> CutoffProbe& {
        auto it = probes.find(n);
        if (it == probes.end()) {
            it = probes.emplace(n, probe(params, n, bundle_order, tol)).first;
        }
        return it->second;
    };

    std::vector<int> tried;
    std::string last_reason;
    for (int n = floor; n + 2 <= cap; ++n) {
        tried.push_back(n);
        const CutoffProbe& lo = at(n);
        const double top = lo.populations(n) + lo.populations(n - 1);
        if (!(top < kTopPopulationLimit)) {
            last_reason = "top-level population " + format_number(top);
            continue;
        }
        const CutoffProbe& hi = at(n + 2);
        if (!stable(lo.n_s, hi.n_s) || !stable(lo.g1, hi.g1) || !stable(lo.gn, hi.gn)) {
            last_reason = "n_s " + format_number(lo.n_s) + " -> " + format_number(hi.n_s) +
                          ", g1 " + format_number(lo.g1) + " -> " + format_number(hi.g1) +
                          ", gn " + format_number(lo.gn) + " -> " + format_number(hi.gn);
            continue;
        }
        return CutoffResult{n, std::move(probes.at(n).steady), std::move(tried)};
    }
    throw ResourceError("auto_cutoff: no stable cutoff up to " + std::to_string(cap) +
                        " (last check at n_max=" +
                        std::to_string(tried.empty() ? floor : tried.back()) +
                        ": " + last_reason + ")");
}

int auto_cutoff(const ModelParams& params, int bundle_order, double tol, int cap) {
    return resolve_cutoff(params, bundle_order, tol, cap).n_max;
}

// ------------------------------- enum strings --------------------------------

namespace {

const std::vector<std::pair<Observable, std::string>>& observable_names() {
    static const std::vector<std::pair<Observable, std::string>> names{
        {Observable::Ns, "ns"},
        {Observable::G1_2, "g1_2"},
        {Observable::GnTrace, "gn_2_trace"},
        {Observable::Pq, "pq"},
        {Observable::SpinProfile, "spin_profile"},
        {Observable::OrderParameter, "order_parameter"},
        {Observable::Spectrum, "spectrum"},
    };
    return names;
}

}  // namespace

std::string to_string(Observable o) {
    for (const auto& [k, v] : observable_names()) {
        if (k == o) {
            return v;
        }
    }
    return "?";
}

Observable parse_observable(const std::string& s) {
    for (const auto& [k, v] : observable_names()) {
        if (v == s) {
            return k;
        }
    }
    throw ParameterError("unknown observable '" + s + "'");
}

std::string to_string(OutputFormat f) {
    return f == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    throw ParameterError("unknown output format '" + s + "' (csv|json)");
}

std::string to_string(DeltaUnit u) {
    switch (u) {
    case DeltaUnit::Kappa:
        return "kappa";
    case DeltaUnit::G:
        return "g";
    case DeltaUnit::Rabi:
        return "rabi";
    }
    return "?";
}

DeltaUnit parse_delta_unit(const std::string& s) {
    if (s == "kappa") {
        return DeltaUnit::Kappa;
    }
    if (s == "g") {
        return DeltaUnit::G;
    }
    if (s == "rabi") {
        return DeltaUnit::Rabi;
    }
    throw ParameterError("unknown delta unit '" + s + "' (kappa|g|rabi)");
}

// ---------------------------- sweep config handling ----------------------------

void validate(const SweepSpec& spec) {
    const int axes = !spec.delta.empty() + !spec.phi.empty() + !spec.atoms.empty();
    if (axes > 2) {
        throw ParameterError("sweep: at most two of delta, phi, N may be swept");
    }
    auto finite = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    };
    if (!finite(spec.delta) || !finite(spec.phi) || !finite(spec.tau_grid)) {
        throw ParameterError("sweep: grids must be finite");
    }
    for (int n : spec.atoms) {
        if (n < 1) {
            throw ParameterError("sweep: N values must be >= 1");
        }
    }
    if (spec.observables.empty()) {
        throw ParameterError("sweep: no observables requested");
    }
    if (spec.bundle_order < 0) {
        throw ParameterError("sweep: bundle order must be >= 0");
    }
    if (!(spec.tol > 0.0)) {
        throw ParameterError("sweep: tolerance must be > 0");
    }
    if (!spec.auto_n_max && spec.bundle_order > 0 &&
        spec.observables.count(Observable::GnTrace) && 2 * spec.bundle_order > spec.base.n_max) {
        throw ParameterError("sweep: bundle order n needs 2n <= n_max");
    }
    validated(spec.base);
}

namespace {

json params_to_json(const ModelParams& p) {
    return {{"N", p.atoms},     {"phi", p.phi},     {"delta", p.delta}, {"g", p.g},
            {"omega", p.omega}, {"kappa", p.kappa}, {"gamma", p.gamma}, {"n_max", p.n_max}};
}

ModelParams params_from_json(const json& j) {
    static const std::set<std::string> known{"N", "phi", "delta", "g", "omega", "kappa", "gamma", "n_max"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) {
            throw ParameterError("config: unknown base field '" + k + "'");
        }
    }
    ModelParams p;
    p.atoms = j.value("N", p.atoms);
    p.phi = j.value("phi", p.phi);
    p.delta = j.value("delta", p.delta);
    p.g = j.value("g", p.g);
    p.omega = j.value("omega", p.omega);
    p.kappa = j.value("kappa", p.kappa);
    p.gamma = j.value("gamma", p.gamma);
    p.n_max = j.value("n_max", p.n_max);
    return p;
}

}  // namespace

SweepSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    static const std::set<std::string> known{"name",         "base",   "axes",     "delta_unit",
                                             "observables",  "bundle_order", "n_max", "tol",
                                             "tau_grid",     "output"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) {
            throw ParameterError("config: unknown field '" + k + "'");
        }
    }
    SweepSpec spec;
    try {
        spec.name = j.value("name", std::string{});
        if (j.contains("base")) {
            spec.base = params_from_json(j.at("base"));
        }
        if (j.contains("axes")) {
            const json& axes = j.at("axes");
            for (const auto& [k, v] : axes.items()) {
                if (k == "delta") {
                    spec.delta = v.get<std::vector<double>>();
                } else if (k == "phi") {
                    spec.phi = v.get<std::vector<double>>();
                } else if (k == "N") {
                    spec.atoms = v.get<std::vector<int>>();
                } else {
                    throw ParameterError("config: unknown axis '" + k + "'");
                }
            }
        }
        if (j.contains("delta_unit")) {
            spec.delta_unit = parse_delta_unit(j.at("delta_unit").get<std::string>());
        }
        if (j.contains("observables")) {
            spec.observables.clear();
            for (const auto& o : j.at("observables")) {
                spec.observables.insert(parse_observable(o.get<std::string>()));
            }
        }
        spec.bundle_order = j.value("bundle_order", 0);
        if (j.contains("n_max")) {
            const json& n = j.at("n_max");
            if (n.is_string()) {
                if (n.get<std::string>() != "auto") {
                    throw ParameterError("config: n_max must be an integer or \"auto\"");
                }
                spec.auto_n_max = true;
            } else {
                spec.auto_n_max = false;
                spec.base.n_max = n.get<int>();
            }
        }
        spec.tol = j.value("tol", spec.tol);
        if (j.contains("tau_grid")) {
            spec.tau_grid = j.at("tau_grid").get<std::vector<double>>();
        }
        if (j.contains("output")) {
            const json& o = j.at("output");
            spec.output = o.value("path", std::string{});
            spec.format = parse_format(o.value("format", std::string("csv")));
        }
    } catch (const json::exception& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    validate(spec);
    return spec;
}

std::string spec_to_json(const SweepSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["base"] = params_to_json(spec.base);
    json axes = json::object();
    if (!spec.delta.empty()) {
        axes["delta"] = spec.delta;
    }
    if (!spec.phi.empty()) {
        axes["phi"] = spec.phi;
    }
    if (!spec.atoms.empty()) {
        axes["N"] = spec.atoms;
    }
    j["axes"] = axes;
    j["delta_unit"] = to_string(spec.delta_unit);
    json obs = json::array();
    for (Observable o : spec.observables) {
        obs.push_back(to_string(o));
    }
    j["observables"] = obs;
    j["bundle_order"] = spec.bundle_order;
    if (spec.auto_n_max) {
        j["n_max"] = "auto";
    } else {
        j["n_max"] = spec.base.n_max;
    }
    j["tol"] = spec.tol;
    if (!spec.tau_grid.empty()) {
        j["tau_grid"] = spec.tau_grid;
    }
    j["output"] = {{"path", spec.output}, {"format", to_string(spec.format)}};
    return j.dump(2);
}

std::vector<ModelParams> expand_points(const SweepSpec& spec) {
    const std::vector<int> atoms = spec.atoms.empty() ? std::vector<int>{spec.base.atoms} : spec.atoms;
    const std::vector<double> phis = spec.phi.empty() ? std::vector<double>{spec.base.phi} : spec.phi;
    const std::vector<double> deltas =
        spec.delta.empty() ? std::vector<double>{spec.base.delta} : spec.delta;
    std::vector<ModelParams> out;
    out.reserve(atoms.size() * phis.size() * deltas.size());
    for (int n : atoms) {
        for (double phi : phis) {
            for (double d : deltas) {
                ModelParams p = spec.base;
                p.atoms = n;
                p.phi = phi;
                switch (spec.delta_unit) {
                case DeltaUnit::Kappa:
                    p.delta = d * p.kappa;
                    break;
                case DeltaUnit::G:
                    p.delta = d * p.g;
                    break;
                case DeltaUnit::Rabi:
                    p.delta = d * vacuum_rabi_splitting(p).plus;
                    break;
                }
                out.push_back(p);
            }
        }
    }
    return out;
}

// --------------------------------- running -----------------------------------

std::string RunRecord::status() const {
    if (!ok) {
        return "failed";
    }
    return extrapolation ? "extrapolated" : "ok";
}

namespace {

SteadyState solve_at(const SweepSpec& spec, ModelParams& p, int bundle_order) {
    if (spec.auto_n_max) {
        CutoffResult cut = resolve_cutoff(p, bundle_order, spec.tol);
        p.n_max = cut.n_max;
        return std::move(cut.steady);
    }
    return steady_state(build_liouvillian(p, space_for(p)), spec.tol);
}

}  // namespace

RunRecord run_point(const SweepSpec& spec, const ModelParams& point, std::size_t index) {
    const auto start = std::chrono::steady_clock::now();
    RunRecord rec;
    rec.index = index;
    rec.version = version_string();
    rec.params = point;
    rec.extrapolation = point.atoms > kDeskScaleAtoms;
    rec.bundle_order = spec.bundle_order > 0 ? spec.bundle_order : default_bundle_order(point.atoms);
    const auto wants = [&](Observable o) { return spec.observables.count(o) > 0; };
    try {
        ModelParams p = validated(point);
        rec.params = p;

        if (wants(Observable::Spectrum)) {
            ModelParams bare = p;
            bare.omega = 0.0;
            bare.n_max = std::max(p.n_max, 2);
            const HilbertSpace space = space_for(bare);
            const QOperator h = build_hamiltonian(bare, space);
            const QOperator ne = total_excitation(space);
            for (int sector = 0; sector <= 2; ++sector) {
                const RealVector e = diagonalize_sector(h, ne, sector).relative_energies();
                for (Index k = 0; k < e.size(); ++k) {
                    rec.spectrum.push_back({sector, static_cast<int>(k), e(k)});
                }
            }
        }
        const bool needs_state = std::any_of(spec.observables.begin(), spec.observables.end(),
                                             [](Observable o) { return o != Observable::Spectrum; });
        if (needs_state) {
            // The bundle order only constrains the cutoff when bundle quantities are asked for.
            const bool bundles = wants(Observable::GnTrace) || wants(Observable::Pq) || spec.bundle_order > 0;
            SteadyState ss = solve_at(spec, p, bundles ? rec.bundle_order : 1);
            rec.params = p;
            rec.residual = ss.report.residual;
            rec.method = to_string(ss.report.method);
            rec.iterations = ss.report.iterations;

            const PhotonStats stats = photon_stats(ss.rho, {rec.bundle_order});
            rec.n_s = stats.n_s;
            rec.g1_2_zero = stats.g1_2_zero;
            const auto gn = stats.g_n_2_zero.find(rec.bundle_order);
            rec.gn_2_zero = gn == stats.g_n_2_zero.end() ? std::nan("") : gn->second;
            if (wants(Observable::Pq)) {
                rec.p_q = stats.p_q;
            }
            if (wants(Observable::SpinProfile)) {
                rec.spin = spin_profile(ss.rho);
            }
            if (wants(Observable::GnTrace)) {
                const SuperOperator l = build_liouvillian(p, space_for(p));
                rec.trace = delayed_g2(ss.rho, l, rec.bundle_order,
                                       spec.tau_grid.empty() ? default_tau_grid() : spec.tau_grid);
            }
            if (wants(Observable::OrderParameter)) {
                ModelParams ref = p;
                ref.atoms = 1;
                ref.delta = reference_detuning(p);
                SteadyState ss_ref = solve_at(spec, ref, 1);
                rec.ns_reference = photon_number(ss_ref.rho);
                rec.order_parameter = order_parameter(rec.n_s, *rec.ns_reference, p.atoms);
            }
            if (!(rec.residual < spec.tol)) {
                rec.ok = false;
                rec.message = "residual " + format_number(rec.residual) + " above tolerance";
            }
        }
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.message = e.what();
        rec.n_s = rec.g1_2_zero = rec.gn_2_zero = std::nan("");
    }
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

void run_sweep(const SweepSpec& spec, unsigned jobs,
               const std::function<void(const RunRecord&)>& sink) {
    validate(spec);
    const std::vector<ModelParams> points = expand_points(spec);
    std::mutex writer;
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        RunRecord rec = run_point(spec, points[i], i);
        std::lock_guard lock(writer);
        sink(rec);
    });
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned jobs) {
    std::vector<RunRecord> out;
    run_sweep(spec, jobs, [&](const RunRecord& r) { out.push_back(r); });
    return out;
}

void sort_records(std::vector<RunRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const RunRecord& a, const RunRecord& b) { return a.index < b.index; });
}

// ------------------------------ figure recipes -------------------------------

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v;
    for (int i = 0; i < count; ++i) {
        v.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    }
    return v;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) {
        v.push_back(n);
    }
    return v;
}

}  // namespace

std::vector<std::string> figure_names() {
    return {"fig1b", "fig2", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig5"};
}

SweepSpec figure_recipe(const std::string& name) {
    SweepSpec s;
    s.name = name;
    s.output = name + ".csv";
    if (name == "fig1b") {
        s.atoms = {2, 3, 4};
        s.phi = linspace(0.0, kPi, 61);
        s.base.omega = 0.0;
        s.base.n_max = 2;
        s.auto_n_max = false;
        s.observables = {Observable::Spectrum};
    } else if (name == "fig2") {
        s.base.atoms = 5;
        s.delta = linspace(-30.0, 30.0, 61);
        s.phi = linspace(0.0, kPi, 25);
        s.observables = {Observable::Ns, Observable::G1_2};
    } else if (name == "fig3a" || name == "fig3b") {
        s.atoms = range(1, kDeskScaleAtoms);
        s.base.phi = name == "fig3a" ? 0.0 : kPi;
        s.delta = {1.0};
        s.delta_unit = DeltaUnit::Rabi;
        s.observables = {Observable::Ns, Observable::G1_2};
    } else if (name == "fig3c") {
        s.atoms = range(1, kDeskScaleAtoms);
        s.base.phi = kPi;
        s.base.delta = 0.0;
        s.observables = {Observable::Ns, Observable::G1_2};
    } else if (name == "fig4a") {
        s.base.atoms = 5;
        s.delta = linspace(0.0, 20.0, 41);
        s.delta_unit = DeltaUnit::G;
        s.phi = linspace(0.0, kPi, 13);
        s.observables = {Observable::Ns, Observable::OrderParameter};
    } else if (name == "fig4b") {
        s.atoms = range(1, kDeskScaleAtoms);
        s.base.phi = 0.0;
        s.delta = {3.0, 6.0, 12.0, 20.0};
        s.delta_unit = DeltaUnit::G;
        s.observables = {Observable::Ns, Observable::G1_2};
    } else if (name == "fig5") {
        s.atoms = {2, 3, 4, 6};
        s.base.phi = kPi;
        s.base.delta = 0.0;
        s.observables = {Observable::Ns,  Observable::G1_2,        Observable::GnTrace,
                         Observable::Pq,  Observable::SpinProfile};
        s.format = OutputFormat::Json;
        s.output = name + ".json";
    } else {
        std::string known;
        for (const auto& n : figure_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ParameterError("unknown figure '" + name + "' (known: " + known + ")");
    }
    return s;
}

// --------------------------------- writers -----------------------------------

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

bool spectrum_only(const SweepSpec& spec) {
    return spec.observables == std::set<Observable>{Observable::Spectrum};
}

double tail_above(const RunRecord& r) {
    double tail = 0.0;
    for (std::size_t q = static_cast<std::size_t>(r.bundle_order) + 1; q < r.p_q.size(); ++q) {
        tail += r.p_q[q];
    }
    return r.p_q.empty() ? std::nan("") : tail;
}

}  // namespace

void write_record_csv_header(std::ostream& out, const SweepSpec& spec) {
    if (spectrum_only(spec)) {
        out << "N,phi,sector,branch_index,energy\n";
        return;
    }
    out << "N,phi,delta,n_max,n_s,g1_2_zero,residual,status";
    if (spec.observables.count(Observable::GnTrace) || spec.observables.count(Observable::Pq)) {
        out << ",bundle_order,gn_2_zero";
    }
    if (spec.observables.count(Observable::Pq)) {
        out << ",pq_above_n";
    }
    if (spec.observables.count(Observable::OrderParameter)) {
        out << ",ns_reference,order_parameter";
    }
    out << '\n';
}

void write_record_csv_row(std::ostream& out, const SweepSpec& spec, const RunRecord& r) {
    const auto& p = r.params;
    if (spectrum_only(spec)) {
        for (const auto& line : r.spectrum) {
            out << p.atoms << ',' << format_number(p.phi) << ',' << line.sector << ',' << line.branch
                << ',' << format_number(line.energy) << '\n';
        }
        return;
    }
    out << p.atoms << ',' << format_number(p.phi) << ',' << format_number(p.delta) << ','
        << p.n_max << ',' << format_number(r.n_s) << ',' << format_number(r.g1_2_zero) << ','
        << format_number(r.residual) << ',' << r.status();
    if (spec.observables.count(Observable::GnTrace) || spec.observables.count(Observable::Pq)) {
        out << ',' << r.bundle_order << ',' << format_number(r.gn_2_zero);
    }
    if (spec.observables.count(Observable::Pq)) {
        out << ',' << format_number(tail_above(r));
    }
    if (spec.observables.count(Observable::OrderParameter)) {
        out << ',' << format_number(r.ns_reference.value_or(std::nan(""))) << ','
            << format_number(r.order_parameter.value_or(std::nan("")));
    }
    out << '\n';
}

void write_records_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<RunRecord>& records) {
    write_record_csv_header(out, spec);
    for (const auto& r : records) {
        write_record_csv_row(out, spec, r);
    }
}

namespace {

// JSON has no NaN; undefined values become null.
json number(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json numbers(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) {
        a.push_back(number(x));
    }
    return a;
}

json record_json(const RunRecord& r) {
    json j;
    j["index"] = r.index;
    j["params"] = params_to_json(r.params);
    j["status"] = r.status();
    if (!r.message.empty()) {
        j["message"] = r.message;
    }
    j["residual"] = number(r.residual);
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    j["wall_time"] = r.wall_time;
    j["version"] = r.version;
    j["n_s"] = number(r.n_s);
    j["g1_2_zero"] = number(r.g1_2_zero);
    j["bundle_order"] = r.bundle_order;
    j["gn_2_zero"] = number(r.gn_2_zero);
    if (!r.p_q.empty()) {
        j["p_q"] = numbers(r.p_q);
    }
    if (r.trace) {
        j["trace"] = {{"tau", numbers(r.trace->tau_grid)}, {"g1", numbers(r.trace->g1)}};
        for (const auto& [n, values] : r.trace->gn) {
            j["trace"]["gn"][std::to_string(n)] = numbers(values);
        }
    }
    if (r.spin) {
        j["spin"]["sigma_z"] = numbers(r.spin->sigma_z);
        json rows = json::array();
        for (Index i = 0; i < r.spin->c_z.rows(); ++i) {
            std::vector<double> row(r.spin->c_z.cols());
            for (Index k = 0; k < r.spin->c_z.cols(); ++k) {
                row[k] = r.spin->c_z(i, k);
            }
            rows.push_back(numbers(row));
        }
        j["spin"]["C_z"] = rows;
    }
    if (r.ns_reference) {
        j["ns_reference"] = number(*r.ns_reference);
    }
    if (r.order_parameter) {
        j["order_parameter"] = number(*r.order_parameter);
    }
    if (!r.spectrum.empty()) {
        json lines = json::array();
        for (const auto& l : r.spectrum) {
            lines.push_back({{"sector", l.sector}, {"branch_index", l.branch}, {"energy", l.energy}});
        }
        j["spectrum"] = lines;
    }
    return j;
}

}  // namespace

std::string record_to_json(const RunRecord& record) {
    return record_json(record).dump();
}

void write_records_json(std::ostream& out, const std::vector<RunRecord>& records) {
    json a = json::array();
    for (const auto& r : records) {
        a.push_back(record_json(r));
    }
    out << a.dump(2) << '\n';
}

void write_branch_table_csv(std::ostream& out, const BranchTable& table) {
    out << "phi,sector,branch_index,energy\n";
    for (std::size_t p = 0; p < table.phi_grid.size(); ++p) {
        for (std::size_t s = 0; s < table.sectors.size(); ++s) {
            const RealVector& e = table.energies[p][s];
            for (Index k = 0; k < e.size(); ++k) {
                out << format_number(table.phi_grid[p]) << ',' << table.sectors[s] << ',' << k << ','
                    << format_number(e(k)) << '\n';
            }
        }
    }
}

void write_trace_csv(std::ostream& out, const CorrelationTrace& trace) {
    out << "tau,g1,gn\n";
    const std::vector<double>* gn = trace.gn.empty() ? nullptr : &trace.gn.begin()->second;
    for (std::size_t i = 0; i < trace.tau_grid.size(); ++i) {
        out << format_number(trace.tau_grid[i]) << ',' << format_number(trace.g1[i]) << ','
            << format_number(gn ? (*gn)[i] : std::nan("")) << '\n';
    }
}

void write_spin_profile_csv(std::ostream& out, const SpinProfile& profile) {
    out << "j,sigma_z,C_1j\n";
    for (std::size_t j = 0; j < profile.sigma_z.size(); ++j) {
        out << j + 1 << ',' << format_number(profile.sigma_z[j]) << ','
            << format_number(profile.c_z(0, static_cast<Index>(j))) << '\n';
    }
}

}  // namespace cavarray
