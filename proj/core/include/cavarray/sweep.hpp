// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

// sweep.hpp: parameter sweeps over (N, φ, Δ), cutoff selection, canned figure
// specs and the CSV / JSON writers used by the command-line tool.

#pragma once

#include "cavarray/observables.hpp"
#include "cavarray/spectrum.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cavarray {

std::string version_string();

// ------------------------------- cutoff search -------------------------------

inline constexpr int kCutoffCap = 24;
inline constexpr double kTopPopulationLimit = 1e-6;
inline constexpr double kCutoffStability = 1e-3;

struct CutoffResult {
    int n_max = 0;
    SteadyState steady;         // solved at n_max
    std::vector<int> tried;
};

// Smallest n_max >= max(2n, 6) whose top two Fock populations stay below 1e-6 and
// whose n_s, g_1^(2)(0) and g_n^(2)(0) move by less than 0.1% at n_max + 2.
// Throws ResourceError when the search would pass `cap`.
CutoffResult resolve_cutoff(const ModelParams& params, int bundle_order,
                            double tol = kDefaultSteadyTol, int cap = kCutoffCap);
int auto_cutoff(const ModelParams& params, int bundle_order, double tol = kDefaultSteadyTol,
                int cap = kCutoffCap);

// ------------------------------- sweep spec ----------------------------------

enum class Observable { Ns, G1_2, GnTrace, Pq, SpinProfile, OrderParameter, Spectrum };
enum class OutputFormat { Csv, Json };
// How delta values on the axis are read: in units of κ, of g, or of Δ1+(N, φ).
enum class DeltaUnit { Kappa, G, Rabi };

std::string to_string(Observable o);
std::string to_string(OutputFormat f);
std::string to_string(DeltaUnit u);
Observable parse_observable(const std::string& s);
OutputFormat parse_format(const std::string& s);
DeltaUnit parse_delta_unit(const std::string& s);

struct SweepSpec {
    std::string name;
    ModelParams base;
    std::vector<double> delta;   // empty: base.delta only
    std::vector<double> phi;     // empty: base.phi only
    std::vector<int> atoms;      // empty: base.atoms only
    DeltaUnit delta_unit = DeltaUnit::Kappa;
    std::set<Observable> observables{Observable::Ns, Observable::G1_2};
    int bundle_order = 0;        // 0: default_bundle_order(N)
    bool auto_n_max = true;      // false: use base.n_max
    double tol = kDefaultSteadyTol;
    std::vector<double> tau_grid;  // empty: default_tau_grid()
    std::string output;
    OutputFormat format = OutputFormat::Csv;

    bool operator==(const SweepSpec&) const = default;
};

// Throws ParameterError on empty or non-finite grids or more than two axes.
void validate(const SweepSpec& spec);

SweepSpec spec_from_json(const std::string& text);
std::string spec_to_json(const SweepSpec& spec);

// Points in canonical order: N outermost, then φ, then Δ.
std::vector<ModelParams> expand_points(const SweepSpec& spec);

// ------------------------------- run records ---------------------------------

struct SpectrumLine {
    int sector;
    int branch;
    double energy;  // relative to the vacuum energy
};

struct RunRecord {
    std::size_t index = 0;        // position in expand_points order
    ModelParams params;           // resolved, with absolute Δ and n_max
    double residual = 0.0;
    std::string method;
    int iterations = 0;
    double wall_time = 0.0;
    bool ok = true;
    bool extrapolation = false;   // N above the desk-scale cap of 8
    std::string message;
    std::string version;

    double n_s = 0.0;
    double g1_2_zero = 0.0;
    int bundle_order = 0;
    double gn_2_zero = 0.0;
    std::vector<double> p_q;
    std::optional<CorrelationTrace> trace;
    std::optional<SpinProfile> spin;
    std::optional<double> ns_reference;
    std::optional<double> order_parameter;
    std::vector<SpectrumLine> spectrum;

    std::string status() const;
};

inline constexpr int kDeskScaleAtoms = 8;

RunRecord run_point(const SweepSpec& spec, const ModelParams& point, std::size_t index);

// Runs every point on `jobs` workers. `sink` is called once per record, from one
// thread at a time, in completion order. Failed points produce records with
// ok == false and the sweep continues.
void run_sweep(const SweepSpec& spec, unsigned jobs,
               const std::function<void(const RunRecord&)>& sink);
std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned jobs);

void sort_records(std::vector<RunRecord>& records);

// ------------------------------ figure recipes -------------------------------

std::vector<std::string> figure_names();
// Throws ParameterError for an unknown name.
SweepSpec figure_recipe(const std::string& name);

// --------------------------------- writers -----------------------------------

// 17 significant digits, "nan" / "inf" spelled out.
std::string format_number(double x);

// Columns N, phi, delta, n_max, n_s, g1_2_zero, residual, status, followed by
// one column per extra observable in the spec.
void write_records_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<RunRecord>& records);
void write_record_csv_header(std::ostream& out, const SweepSpec& spec);
void write_record_csv_row(std::ostream& out, const SweepSpec& spec, const RunRecord& record);

// JSON array of full records, including traces and spin matrices.
void write_records_json(std::ostream& out, const std::vector<RunRecord>& records);
std::string record_to_json(const RunRecord& record);

// phi, sector, branch_index, energy
void write_branch_table_csv(std::ostream& out, const BranchTable& table);
// tau, g1, gn
void write_trace_csv(std::ostream& out, const CorrelationTrace& trace);
// j, sigma_z, C_1j
void write_spin_profile_csv(std::ostream& out, const SpinProfile& profile);

}  // namespace cavarray
