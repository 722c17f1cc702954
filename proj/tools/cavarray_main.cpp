// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// cavarray command-line front end: spectra, steady states, correlation traces,
// scaling runs, (Δ, φ) maps, canned figure data and oracle validation.

#include "cavarray/errors.hpp"
#include "cavarray/oracle.hpp"
#include "cavarray/parallel.hpp"
#include "cavarray/semiclassics.hpp"
#include "cavarray/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace cavarray;

namespace {

// ------------------------------ value parsing --------------------------------

// A number, optionally times pi: "0.5", "pi", "pi/6", "2pi/3", "0.25pi".
double parse_scalar(std::string s) {
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw ParameterError("cannot parse number '" + s + "'");
        }
        return v;
    }
    std::string coef = s.substr(0, pos);
    std::string rest = s.substr(pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double v = (coef.empty() ? 1.0 : parse_scalar(coef)) * kPi;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ParameterError("cannot parse number '" + s + "'");
        }
        v /= parse_scalar(rest.substr(1));
    }
    return v;
}

// "lo:hi:count" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    std::vector<double> out;
    if (sep == ':') {
        if (parts.size() != 3) {
            throw ParameterError("grid '" + text + "' must look like lo:hi:count");
        }
        const double lo = parse_scalar(parts[0]);
        const double hi = parse_scalar(parts[1]);
        const int count = std::stoi(parts[2]);
        if (count < 1) {
            throw ParameterError("grid '" + text + "' needs count >= 1");
        }
        for (int i = 0; i < count; ++i) {
            out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        }
        return out;
    }
    for (const auto& p : parts) {
        out.push_back(parse_scalar(p));
    }
    return out;
}

// "1:8" or "1,3,5".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        for (int n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ResourceError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// --------------------------------- options -----------------------------------

struct Global {
    std::string config;
    unsigned jobs = 1;
    std::string out = "-";
    std::string format = "csv";
    bool sorted = false;
    double tol = kDefaultSteadyTol;
    std::string nmax = "auto";
};

struct Point {
    int atoms = 2;
    std::string phi = "0";
    std::string delta = "0";
    double g = 10.0;
    double omega = 0.2;
    double gamma = 0.1;
    std::string delta_unit = "kappa";
};

struct Options {
    Global global;
    Point point;
    CLI::App* app = nullptr;
};

bool given(const CLI::App* sub, const std::string& name) {
    for (const CLI::App* a = sub; a != nullptr; a = a->get_parent()) {
        if (const CLI::Option* o = a->get_option_no_throw(name); o != nullptr && o->count() > 0) {
            return true;
        }
    }
    return false;
}

void add_point_options(CLI::App* sub, Point& pt) {
    sub->add_option("--N", pt.atoms, "number of atoms")->capture_default_str();
    sub->add_option("--phi", pt.phi, "interference phase in radians (accepts pi, pi/6, ...)")
        ->capture_default_str();
    sub->add_option("--delta", pt.delta, "detuning, in units set by --delta-unit")
        ->capture_default_str();
    sub->add_option("--g", pt.g, "atom-cavity coupling / kappa")->capture_default_str();
    sub->add_option("--omega", pt.omega, "atomic drive / kappa")->capture_default_str();
    sub->add_option("--gamma", pt.gamma, "collective atomic decay / kappa")->capture_default_str();
    sub->add_option("--delta-unit", pt.delta_unit, "kappa | g | rabi (multiples of the bright polariton detuning)")
        ->check(CLI::IsMember({"kappa", "g", "rabi"}))
        ->capture_default_str();
}

// Sweep from defaults, then --config, then explicit flags.
SweepSpec build_spec(const CLI::App* sub, const Options& o, SweepSpec spec) {
    if (!o.global.config.empty()) {
        spec = spec_from_json(read_file(o.global.config));
    }
    const Point& pt = o.point;
    if (given(sub, "--N")) spec.base.atoms = pt.atoms;
    if (given(sub, "--phi")) spec.base.phi = parse_scalar(pt.phi);
    if (given(sub, "--delta")) spec.base.delta = parse_scalar(pt.delta);
    if (given(sub, "--g")) spec.base.g = pt.g;
    if (given(sub, "--omega")) spec.base.omega = pt.omega;
    if (given(sub, "--gamma")) spec.base.gamma = pt.gamma;
    if (given(sub, "--delta-unit")) spec.delta_unit = parse_delta_unit(pt.delta_unit);
    if (given(sub, "--tol")) spec.tol = o.global.tol;
    if (given(sub, "--format")) spec.format = parse_format(o.global.format);
    if (given(sub, "--out")) spec.output = o.global.out;
    if (given(sub, "--nmax")) {
        if (o.global.nmax == "auto") {
            spec.auto_n_max = true;
        } else {
            spec.auto_n_max = false;
            spec.base.n_max = std::stoi(o.global.nmax);
        }
    }
    // A lone point on the delta axis still goes through the unit conversion.
    if (spec.delta.empty() && spec.delta_unit != DeltaUnit::Kappa) {
        spec.delta = {spec.base.delta};
    }
    validate(spec);
    return spec;
}

// --------------------------------- output ------------------------------------

class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {
        if (path_.empty() || path_ == "-") {
            out_ = &std::cout;
        } else {
            file_ = std::make_unique<std::ofstream>(path_);
            if (!*file_) {
                throw ResourceError("cannot write '" + path_ + "'");
            }
            out_ = file_.get();
        }
    }
    std::ostream& stream() { return *out_; }
    bool is_file() const { return file_ != nullptr; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_ = nullptr;
};

// Reproducibility metadata lives next to the data file, so data bodies stay
// byte-identical across runs.
void write_metadata(const Sink& sink, const std::string& command, const SweepSpec* spec,
                    unsigned jobs, double wall_time, const nlohmann::json& extra = {}) {
    if (!sink.is_file()) {
        return;
    }
    nlohmann::json meta;
    meta["version"] = version_string();
    meta["created"] = utc_timestamp();
    meta["command"] = command;
    meta["jobs"] = jobs;
    meta["wall_time"] = wall_time;
    if (spec != nullptr) {
        meta["spec"] = nlohmann::json::parse(spec_to_json(*spec));
    }
    if (!extra.is_null()) {
        meta["result"] = extra;
    }
    std::ofstream(sink.path() + ".meta.json") << meta.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs a sweep and writes its records. Returns the records in output order.
using Summary = std::function<nlohmann::json(const std::vector<RunRecord>&)>;

std::vector<RunRecord> execute(const SweepSpec& spec, const Options& o, Sink& sink,
                               const std::string& command, const Summary& summary = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<RunRecord> records;
    const bool stream_rows = spec.format == OutputFormat::Csv && !o.global.sorted;
    if (stream_rows) {
        write_record_csv_header(sink.stream(), spec);
    }
    run_sweep(spec, o.global.jobs, [&](const RunRecord& r) {
        if (!r.ok) {
            std::cerr << "point " << r.index << " (N=" << r.params.atoms
                      << ", phi=" << format_number(r.params.phi)
                      << ", delta=" << format_number(r.params.delta) << ") failed: " << r.message
                      << '\n';
        }
        if (stream_rows) {
            write_record_csv_row(sink.stream(), spec, r);
            sink.stream().flush();
        }
        records.push_back(r);
    });
    if (o.global.sorted) {
        sort_records(records);
    }
    if (!stream_rows) {
        if (spec.format == OutputFormat::Csv) {
            write_records_csv(sink.stream(), spec, records);
        } else {
            write_records_json(sink.stream(), records);
        }
    }
    write_metadata(sink, command, &spec, o.global.jobs, seconds_since(t0),
                   summary ? summary(records) : nlohmann::json{});
    return records;
}

int exit_status(const std::vector<RunRecord>& records) {
    for (const auto& r : records) {
        if (!r.ok) {
            return 3;
        }
    }
    return 0;
}

// ------------------------------- subcommands ---------------------------------

int cmd_spectrum(const CLI::App* sub, const Options& o, const std::string& phi_grid, int max_sector) {
    SweepSpec defaults;
    defaults.observables = {Observable::Spectrum};
    const SweepSpec spec = build_spec(sub, o, defaults);
    ModelParams p = spec.base;
    p.omega = 0.0;
    p.n_max = std::max(max_sector, 1);
    const auto t0 = std::chrono::steady_clock::now();
    const BranchTable table = branch_sweep(p, parse_grid(phi_grid), max_sector);
    Sink sink(spec.output.empty() ? o.global.out : spec.output);
    if (spec.format == OutputFormat::Csv) {
        write_branch_table_csv(sink.stream(), table);
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t i = 0; i < table.phi_grid.size(); ++i) {
            nlohmann::json row{{"phi", table.phi_grid[i]}};
            for (std::size_t s = 0; s < table.sectors.size(); ++s) {
                const RealVector& e = table.energies[i][s];
                row["sectors"][std::to_string(table.sectors[s])] =
                    std::vector<double>(e.data(), e.data() + e.size());
                row["distinct_levels"][std::to_string(table.sectors[s])] = table.distinct_levels[i][s];
            }
            j.push_back(row);
        }
        sink.stream() << j.dump(2) << '\n';
    }
    write_metadata(sink, "spectrum", &spec, 1, seconds_since(t0));
    return 0;
}

int cmd_steady(const CLI::App* sub, const Options& o, const std::string& spin_out) {
    SweepSpec defaults;
    defaults.observables = {Observable::Ns, Observable::G1_2, Observable::Pq, Observable::SpinProfile};
    const SweepSpec spec = build_spec(sub, o, defaults);
    Sink sink(spec.output.empty() ? o.global.out : spec.output);
    const auto records = execute(spec, o, sink, "steady");
    if (!spin_out.empty()) {
        Sink spin(spin_out);
        for (const auto& r : records) {
            if (r.spin) {
                write_spin_profile_csv(spin.stream(), *r.spin);
            }
        }
    }
    return exit_status(records);
}

int cmd_correlations(const CLI::App* sub, const Options& o, int bundle, const std::string& tau,
                     const std::string& spin_out) {
    SweepSpec defaults;
    defaults.observables = {Observable::Ns, Observable::G1_2, Observable::GnTrace, Observable::Pq,
                            Observable::SpinProfile};
    SweepSpec spec = build_spec(sub, o, defaults);
    if (bundle > 0) {
        spec.bundle_order = bundle;
    }
    if (!tau.empty()) {
        spec.tau_grid = parse_grid(tau);
    }
    validate(spec);
    const auto points = expand_points(spec);
    if (points.size() != 1) {
        throw ParameterError("correlations: expects a single parameter point");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const RunRecord r = run_point(spec, points.front(), 0);
    Sink sink(spec.output.empty() ? o.global.out : spec.output);
    if (!r.ok) {
        std::cerr << "correlations failed: " << r.message << '\n';
    } else if (spec.format == OutputFormat::Csv) {
        write_trace_csv(sink.stream(), *r.trace);
    } else {
        write_records_json(sink.stream(), {r});
    }
    if (!spin_out.empty() && r.spin) {
        Sink spin(spin_out);
        write_spin_profile_csv(spin.stream(), *r.spin);
    }
    write_metadata(sink, "correlations", &spec, 1, seconds_since(t0),
                   {{"n_max", r.params.n_max}, {"residual", r.residual}, {"n_s", r.n_s},
                    {"bundle_order", r.bundle_order}});
    return r.ok ? 0 : 3;
}

int cmd_scaling(const CLI::App* sub, const Options& o, const std::string& atoms,
                const std::string& parity) {
    SweepSpec defaults;
    defaults.delta = {1.0};
    defaults.delta_unit = DeltaUnit::Rabi;
    defaults.atoms = parse_int_list("1:8");
    SweepSpec spec = build_spec(sub, o, defaults);
    if (given(sub, "--atoms")) {
        spec.atoms = parse_int_list(atoms);
    }
    validate(spec);

    Sink sink(spec.output.empty() ? o.global.out : spec.output);
    Options sorted = o;
    sorted.global.sorted = true;
    const auto fit_of = [&](const std::vector<RunRecord>& records) -> nlohmann::json {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : records) {
            const int n = r.params.atoms;
            const bool keep = parity == "all" || (parity == "odd" && n % 2 == 1) ||
                              (parity == "even" && n % 2 == 0);
            if (keep && r.ok && r.n_s > 0.0) {
                pts.emplace_back(n, r.n_s);
            }
        }
        if (pts.size() < 3) {
            std::cerr << "fewer than three usable points; no fit\n";
            return nullptr;
        }
        const ScalingFit fit = powerlaw_fit(pts);
        std::cerr << "n_s = " << format_number(fit.amplitude) << " N^" << format_number(fit.exponent)
                  << "  (R^2 = " << format_number(fit.r_squared) << ", " << pts.size() << " points)\n";
        return {{"amplitude", fit.amplitude}, {"exponent", fit.exponent},
                {"r_squared", fit.r_squared}, {"N_range", fit.n_range}};
    };
    const auto records = execute(spec, sorted, sink, "scaling", fit_of);
    return exit_status(records);
}

int cmd_map(const CLI::App* sub, const Options& o, const std::string& delta_grid,
            const std::string& phi_grid) {
    SweepSpec defaults;
    defaults.base.atoms = 5;
    defaults.delta = parse_grid("-30:30:61");
    defaults.phi = parse_grid("0:pi:13");
    SweepSpec spec = build_spec(sub, o, defaults);
    if (given(sub, "--delta-grid")) {
        spec.delta = parse_grid(delta_grid);
    }
    if (given(sub, "--phi-grid")) {
        spec.phi = parse_grid(phi_grid);
    }
    validate(spec);
    Sink sink(spec.output.empty() ? o.global.out : spec.output);
    return exit_status(execute(spec, o, sink, "map"));
}

int cmd_figure(const CLI::App* sub, const Options& o, const std::string& name) {
    SweepSpec spec = figure_recipe(name);
    const std::string default_out = spec.output;
    spec = build_spec(sub, o, spec);
    // Without --out, figure data goes to <name>.<format> in the working directory.
    if (!given(sub, "--out") && o.global.config.empty()) {
        spec.output = name + (spec.format == OutputFormat::Csv ? ".csv" : ".json");
    }
    Sink sink(spec.output);
    const auto records = execute(spec, o, sink, "figure " + name);
    std::cerr << "wrote " << records.size() << " records to " << spec.output << '\n';
    return exit_status(records);
}

int cmd_validate(const Options& o) {
    const int n_max = o.global.nmax == "auto" ? 6 : std::stoi(o.global.nmax);
    const double tol = 1e-8;
    struct Row {
        int atoms;
        std::string point;
        double d_ns, d_g1, d_sz, d_cz;
    };
    std::vector<ModelParams> params;
    std::vector<std::string> names;
    for (int n = 1; n <= kOracleMaxSteadyAtoms; ++n) {
        for (int k = 0; k < 3; ++k) {
            ModelParams p;
            p.atoms = n;
            p.n_max = n_max;
            p.phi = k == 0 ? 0.0 : kPi;
            p.delta = k == 2 ? 0.0 : vacuum_rabi_splitting(p).plus;
            params.push_back(p);
            names.push_back(k == 0 ? "phi=0,delta=D1+" : k == 1 ? "phi=pi,delta=D1+" : "phi=pi,delta=0");
        }
    }
    std::vector<Row> rows(params.size());
    parallel_for(params.size(), o.global.jobs, [&](std::size_t i) {
        const ModelParams& p = params[i];
        const FullObservables full = full_steady_observables(p);
        const SteadyState ss = steady_state(build_liouvillian(p, space_for(p)), std::min(o.global.tol, 1e-13));
        const SpinProfile sp = spin_profile(ss.rho);
        Row r{p.atoms, names[i], std::abs(photon_number(ss.rho) - full.n_s), 0.0, 0.0, 0.0};
        const double g1 = photon_stats(ss.rho, {}).g1_2_zero;
        // g1 gets huge at dark points, so compare it relative to its size
        r.d_g1 = std::isnan(g1) && std::isnan(full.g1_2_zero)
                     ? 0.0
                     : std::abs(g1 - full.g1_2_zero) / std::max(1.0, std::abs(full.g1_2_zero));
        for (int a = 0; a < p.atoms; ++a) {
            r.d_sz = std::max(r.d_sz, std::abs(sp.sigma_z[a] - full.sigma_z[a]));
            for (int b = 0; b < p.atoms; ++b) {
                r.d_cz = std::max(r.d_cz, std::abs(sp.c_z(a, b) - full.c_z(a, b)));
            }
        }
        rows[i] = r;
    });
    bool all_ok = true;
    std::cout << "N,point,d_ns,rel_d_g1_2_zero,d_sigma_z,d_C_z,status\n";
    for (const auto& r : rows) {
        const bool ok = r.d_ns <= tol && r.d_g1 <= tol && r.d_sz <= tol && r.d_cz <= tol;
        all_ok = all_ok && ok;
        std::cout << r.atoms << ',' << r.point << ',' << format_number(r.d_ns) << ','
                  << format_number(r.d_g1) << ',' << format_number(r.d_sz) << ','
                  << format_number(r.d_cz) << ',' << (ok ? "ok" : "mismatch") << '\n';
    }
    ModelParams leak;
    leak.atoms = kOracleMaxAtoms;
    leak.n_max = std::min(n_max, 6);
    leak.phi = kPi;
    const double worst = symmetric_leakage(leak, 20.0);
    const bool leak_ok = worst < 1e-10;
    std::cout << "# symmetric-sector leakage N=" << leak.atoms << " over t=20: "
              << format_number(worst) << (leak_ok ? " ok" : " FAIL") << '\n';
    return all_ok && leak_ok ? 0 : 1;
}

unsigned jobs_from_env() {
    if (const char* env = std::getenv("CAVITY_ARRAY_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring CAVITY_ARRAY_JOBS='" << env << "'\n";
    }
    return default_jobs();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavarray: open-system simulation of atomic arrays in a driven cavity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version_string());

    Options o;
    o.global.jobs = jobs_from_env();
    app.add_option("--config", o.global.config, "JSON sweep specification")->check(CLI::ExistingFile);
    app.add_option("--jobs", o.global.jobs, "worker threads (default: $CAVITY_ARRAY_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", o.global.out, "output path, - for stdout");
    app.add_option("--format", o.global.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--sorted", o.global.sorted, "emit rows in canonical grid order");
    app.add_option("--tol", o.global.tol, "steady-state residual tolerance")->capture_default_str();
    app.add_option("--nmax", o.global.nmax, "photon cutoff: integer or auto")
        ->check([](const std::string& s) -> std::string {
            if (s == "auto") return {};
            try {
                return std::stoi(s) >= 1 ? std::string{} : "n_max must be >= 1";
            } catch (const std::exception&) {
                return "expected an integer or auto";
            }
        });

    auto* spectrum = app.add_subcommand("spectrum", "branch energies of excitation sectors versus phi");
    std::string spec_phi_grid = "0:pi:61";
    int max_sector = 2;
    add_point_options(spectrum, o.point);
    spectrum->add_option("--phi-grid", spec_phi_grid, "lo:hi:count or list")->capture_default_str();
    spectrum->add_option("--max-sector", max_sector, "highest excitation sector")->capture_default_str();

    auto* steady = app.add_subcommand("steady", "steady-state photon and spin observables at one point");
    std::string steady_spin_out;
    add_point_options(steady, o.point);
    steady->add_option("--spin-out", steady_spin_out, "also write the spin profile CSV here");

    auto* corr = app.add_subcommand("correlations", "delayed g2 of photons and n-photon bundles");
    int bundle = 0;
    std::string tau;
    std::string corr_spin_out;
    add_point_options(corr, o.point);
    corr->add_option("--n", bundle, "bundle order (default depends on N)");
    corr->add_option("--tau", tau, "delay grid, lo:hi:count or list (default 200 points on [0, 50])");
    corr->add_option("--spin-out", corr_spin_out, "also write the spin profile CSV here");

    auto* scaling = app.add_subcommand("scaling", "n_s versus N with a power-law fit");
    std::string atoms_list = "1:8";
    std::string parity = "all";
    add_point_options(scaling, o.point);
    scaling->add_option("--atoms", atoms_list, "N values, lo:hi or list")->capture_default_str();
    scaling->add_option("--fit-parity", parity, "all | odd | even")
        ->check(CLI::IsMember({"all", "odd", "even"}))
        ->capture_default_str();

    auto* map = app.add_subcommand("map", "n_s and g1(0) on a (delta, phi) grid");
    std::string delta_grid = "-30:30:61";
    std::string phi_grid = "0:pi:13";
    add_point_options(map, o.point);
    map->add_option("--delta-grid", delta_grid, "lo:hi:count or list")->capture_default_str();
    map->add_option("--phi-grid", phi_grid, "lo:hi:count or list")->capture_default_str();

    auto* figure = app.add_subcommand("figure", "regenerate the data behind a named figure");
    std::string figure_name;
    figure->add_option("name", figure_name, "figure name")
        ->required()
        ->check(CLI::IsMember(figure_names()));

    auto* validate_cmd = app.add_subcommand("validate", "compare the collective solver with the per-site oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*spectrum) return cmd_spectrum(spectrum, o, spec_phi_grid, max_sector);
        if (*steady) return cmd_steady(steady, o, steady_spin_out);
        if (*corr) return cmd_correlations(corr, o, bundle, tau, corr_spin_out);
        if (*scaling) return cmd_scaling(scaling, o, atoms_list, parity);
        if (*map) return cmd_map(map, o, delta_grid, phi_grid);
        if (*figure) return cmd_figure(figure, o, figure_name);
        if (*validate_cmd) return cmd_validate(o);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
