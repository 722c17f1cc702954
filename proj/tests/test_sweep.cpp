// Copyright 2026 The cavarray Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cavarray/errors.hpp"
#include "cavarray/semiclassics.hpp"
#include "cavarray/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace cavarray;

namespace {

std::string csv_body(const SweepSpec& spec, std::vector<RunRecord> records) {
    sort_records(records);
    std::ostringstream os;
    write_records_csv(os, spec, records);
    return os.str();
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("number formatting keeps 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-1.0 / 3.0) == "-0.33333333333333331");
    CHECK(format_number(2.5e-300) == "2.5e-300");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(std::stod(format_number(kPi)) == kPi);
}

TEST_CASE("enum names round trip") {
    for (Observable o : {Observable::Ns, Observable::G1_2, Observable::GnTrace, Observable::Pq,
                         Observable::SpinProfile, Observable::OrderParameter, Observable::Spectrum}) {
        CHECK(parse_observable(to_string(o)) == o);
    }
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_delta_unit("rabi") == DeltaUnit::Rabi);
    CHECK_THROWS_AS(parse_observable("photons"), ParameterError);
    CHECK_THROWS_AS(parse_format("xml"), ParameterError);
}

TEST_CASE("config round trip") {
    SweepSpec s;
    s.name = "round trip";
    s.base.atoms = 3;
    s.base.g = 7.5;
    s.base.gamma = 0.05;
    s.delta = {-1.0, 0.1, 1e-7, 2.0 / 3.0};
    s.phi = {0.0, kPi};
    s.delta_unit = DeltaUnit::G;
    s.observables = {Observable::Ns, Observable::Pq, Observable::OrderParameter};
    s.bundle_order = 2;
    s.auto_n_max = false;
    s.base.n_max = 9;
    s.tol = 3e-11;
    s.tau_grid = {0.0, 0.5, 1.25};
    s.output = "out/x.json";
    s.format = OutputFormat::Json;
    CHECK(spec_from_json(spec_to_json(s)) == s);

    SweepSpec d;
    CHECK(spec_from_json(spec_to_json(d)) == d);
    CHECK(spec_from_json(spec_to_json(figure_recipe("fig4a"))) == figure_recipe("fig4a"));
}

TEST_CASE("config parsing rejects bad documents") {
    CHECK_THROWS_AS(spec_from_json("{\"colour\": 1}"), ParameterError);
    CHECK_THROWS_AS(spec_from_json("{\"base\": {\"Ncount\": 2}}"), ParameterError);
    CHECK_THROWS_AS(spec_from_json("{\"axes\": {\"g\": [1, 2]}}"), ParameterError);
    CHECK_THROWS_AS(spec_from_json("{\"n_max\": \"lots\"}"), ParameterError);
    CHECK_THROWS_AS(spec_from_json("not json"), ParameterError);
    CHECK_THROWS_AS(spec_from_json("{\"axes\": {\"N\": [1], \"phi\": [0], \"delta\": [0]}}"),
                    ParameterError);
    const SweepSpec s = spec_from_json("{\"base\": {\"N\": 4}, \"n_max\": 10}");
    CHECK(s.base.atoms == 4);
    CHECK_FALSE(s.auto_n_max);
    CHECK(s.base.n_max == 10);
}

TEST_CASE("sweep config validation") {
    SweepSpec s;
    CHECK_NOTHROW(validate(s));
    s.atoms = {1, 2};
    s.phi = {0.0};
    s.delta = {0.0};
    CHECK_THROWS_AS(validate(s), ParameterError);
    s = SweepSpec{};
    s.delta = {0.0, std::nan("")};
    CHECK_THROWS_AS(validate(s), ParameterError);
    s = SweepSpec{};
    s.observables.clear();
    CHECK_THROWS_AS(validate(s), ParameterError);
    s = SweepSpec{};
    s.auto_n_max = false;
    s.base.n_max = 5;
    s.bundle_order = 3;
    s.observables = {Observable::Ns, Observable::GnTrace};
    CHECK_THROWS_AS(validate(s), ParameterError);
}

TEST_CASE("points expand N-major with detuning units applied") {
    SweepSpec s;
    s.atoms = {1, 4};
    s.delta = {0.5, 1.0};
    s.delta_unit = DeltaUnit::Rabi;
    s.base.phi = kPi / 2;
    const auto pts = expand_points(s);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].atoms == 1);
    CHECK(pts[0].delta == doctest::Approx(5.0));
    CHECK(pts[3].atoms == 4);
    CHECK(pts[3].delta == doctest::Approx(10 * std::sqrt(2.0)));
    s.delta_unit = DeltaUnit::G;
    CHECK(expand_points(s)[1].delta == doctest::Approx(10.0));

    SweepSpec single;
    CHECK(expand_points(single).size() == 1);
}

TEST_CASE("empty cavity takes the floor cutoff") {
    ModelParams p;
    p.atoms = 3;
    p.g = 0.0;
    p.omega = 0.0;
    CHECK(auto_cutoff(p, 1) == 6);
    CHECK(auto_cutoff(p, 4) == 8);
    CHECK_THROWS_AS(auto_cutoff(p, 12), ResourceError);
    CHECK_THROWS_AS(auto_cutoff(p, 0), ParameterError);
}

TEST_CASE("resolved cutoff passes its own stability gate") {
    ModelParams p;
    p.atoms = 2;
    p.phi = kPi;
    p.delta = 0.0;
    const CutoffResult cut = resolve_cutoff(p, 2);
    CHECK(cut.n_max >= 6);
    CHECK(cut.tried.back() == cut.n_max);
    ModelParams hi = p;
    hi.n_max = cut.n_max + 2;
    const SteadyState a = cut.steady;
    const SteadyState b = steady_state(build_liouvillian(hi, space_for(hi)));
    const PhotonStats sa = photon_stats(a.rho, {2});
    const PhotonStats sb = photon_stats(b.rho, {2});
    CHECK(std::abs(sa.n_s - sb.n_s) <= 1e-3 * sb.n_s);
    CHECK(std::abs(sa.g1_2_zero - sb.g1_2_zero) <= 1e-3 * sb.g1_2_zero);
    CHECK(std::abs(sa.g_n_2_zero.at(2) - sb.g_n_2_zero.at(2)) <= 1e-3 * sb.g_n_2_zero.at(2));
}

TEST_CASE("sorted output does not depend on the worker count") {
    SweepSpec s;
    s.base.atoms = 2;
    s.delta = {-12.0, -3.0, 0.0, 4.0, 14.142135623730951};
    s.phi = {0.0, 2.0};
    s.auto_n_max = false;
    s.base.n_max = 5;
    const std::string serial = csv_body(s, run_sweep(s, 1));
    const std::string pooled = csv_body(s, run_sweep(s, 4));
    CHECK(serial == pooled);
    CHECK(first_line(serial) == "N,phi,delta,n_max,n_s,g1_2_zero,residual,status");
    // header plus one row per point
    CHECK(std::count(serial.begin(), serial.end(), '\n') == 11);
}

TEST_CASE("a failing point yields a failed row and the sweep continues") {
    SweepSpec s;
    s.atoms = {1, 2};
    s.observables = {Observable::Ns, Observable::Pq};
    s.bundle_order = 12;  // floor 24 exceeds the cutoff cap
    auto recs = run_sweep(s, 2);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
        CHECK(r.status() == "failed");
        CHECK(std::isnan(r.n_s));
        CHECK(r.message.find("auto_cutoff") != std::string::npos);
    }
    std::ostringstream os;
    write_records_csv(os, s, recs);
    CHECK(os.str().find(",failed,") != std::string::npos);
}

TEST_CASE("every accepted row is below the residual tolerance") {
    SweepSpec s;
    s.atoms = {1, 3};
    s.base.phi = kPi;
    s.auto_n_max = false;
    s.base.n_max = 6;
    for (const auto& r : run_sweep(s, 2)) {
        CHECK(r.ok);
        CHECK(r.residual < s.tol);
        CHECK(r.status() == "ok");
        CHECK(r.version == version_string());
    }
    s.atoms = {9};
    s.base.n_max = 2;
    const auto big = run_sweep(s, 1);
    CHECK(big[0].status() == "extrapolated");
}

TEST_CASE("spectrum-only specs write branch rows") {
    SweepSpec s;
    s.base.atoms = 2;
    s.base.omega = 0.0;
    s.observables = {Observable::Spectrum};
    const auto recs = run_sweep(s, 1);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].spectrum.size() == 1 + 3 + 4);
    std::ostringstream os;
    write_records_csv(os, s, recs);
    CHECK(first_line(os.str()) == "N,phi,sector,branch_index,energy");
}

TEST_CASE("order parameter column") {
    SweepSpec s;
    s.base.atoms = 1;
    s.delta = {1.0};
    s.delta_unit = DeltaUnit::Rabi;
    s.observables = {Observable::Ns, Observable::OrderParameter};
    const auto recs = run_sweep(s, 1);
    REQUIRE(recs[0].order_parameter.has_value());
    CHECK(*recs[0].order_parameter == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("table writers") {
    CorrelationTrace tr{{0.0, 1.0}, {2.0, 1.5}, {{2, {0.1, 0.7}}}};
    std::ostringstream a;
    write_trace_csv(a, tr);
    CHECK(a.str() == "tau,g1,gn\n0,2,0.10000000000000001\n1,1.5,0.69999999999999996\n");

    SpinProfile sp{{-0.5, -0.25}, Eigen::MatrixXd::Identity(2, 2)};
    std::ostringstream b;
    write_spin_profile_csv(b, sp);
    CHECK(first_line(b.str()) == "j,sigma_z,C_1j");
    CHECK(b.str().find("2,-0.25,0\n") != std::string::npos);

    ModelParams p;
    p.omega = 0.0;
    const BranchTable t = branch_sweep(p, {0.0}, 1);
    std::ostringstream c;
    write_branch_table_csv(c, t);
    CHECK(first_line(c.str()) == "phi,sector,branch_index,energy");
}

TEST_CASE("figure recipes") {
    for (const auto& n : figure_names()) {
        CHECK_NOTHROW(validate(figure_recipe(n)));
    }
    const SweepSpec f4b = figure_recipe("fig4b");
    CHECK(f4b.atoms == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(f4b.delta == std::vector<double>{3, 6, 12, 20});
    CHECK(f4b.delta_unit == DeltaUnit::G);
    const SweepSpec f5 = figure_recipe("fig5");
    CHECK(f5.atoms == std::vector<int>{2, 3, 4, 6});
    CHECK(f5.base.phi == kPi);
    CHECK(f5.observables.count(Observable::GnTrace) == 1);
    const SweepSpec f3b = figure_recipe("fig3b");
    CHECK(expand_points(f3b)[2].delta == doctest::Approx(vacuum_rabi_splitting(expand_points(f3b)[2]).plus));
    CHECK_THROWS_AS(figure_recipe("fig9"), ParameterError);
}
