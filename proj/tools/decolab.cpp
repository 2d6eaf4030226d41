// decolab.cpp — CLI for the moving-qubit decoherence model.
//
// Subcommands mirror the library: propagate / concurrence compute
// trajectories, esd / roe / sweep / fit analyze entanglement, figure emits
// the frozen reference datasets. All rates are in units of gamma0 unless
// --gamma0 is given. Config files are flat key=value, overridden by flags.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decolab/csv.hpp"
#include "decolab/entanglement.hpp"
#include "decolab/errors.hpp"
#include "decolab/figures.hpp"
#include "decolab/kernel.hpp"
#include "decolab/oracle.hpp"
#include "decolab/propagator.hpp"

namespace {

using namespace decolab;

struct GridOpts {
    double x_start = 0.0;
    double x_end = -1.0;   // negative: pick by regime
    int n_points = -1;
};

struct MethodOpt {
    std::string name = "analytic";
};

void add_param_options(CLI::App* cmd, PhysicalParams& p, double& tau_in) {
    cmd->add_option("--gamma0", p.gamma0, "decay rate gamma0 (unit scale)")->capture_default_str();
    cmd->add_option("--lambda", p.lambda, "spectral width lambda")->capture_default_str();
    cmd->add_option("--omega0", p.omega0, "transition frequency omega0")->capture_default_str();
    cmd->add_option("--delta", p.delta, "detuning Delta")->capture_default_str();
    cmd->add_option("--beta", p.beta, "velocity ratio v/c")->capture_default_str();
    cmd->add_option("--tau", tau_in, "mirror delay (omit for the continuum limit)");
}

void add_grid_options(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--x-start", g.x_start, "grid start, scaled time x = gamma0 t")
        ->capture_default_str();
    cmd->add_option("--x-end", g.x_end, "grid end (default 30 Markovian / 100 non-Markovian)");
    cmd->add_option("--n-points", g.n_points, "grid points (default 3001 / 10001)");
}

TimeGrid resolve_grid(const GridOpts& g, const PhysicalParams& p) {
    const bool markovian = p.lambda / p.gamma0 > 1.0;
    TimeGrid grid = markovian ? TimeGrid::markovian() : TimeGrid::non_markovian();
    grid.x_start = g.x_start;
    if (g.x_end > 0.0) grid.x_end = g.x_end;
    if (g.n_points > 0) grid.n_points = g.n_points;
    grid.validate();
    return grid;
}

const std::vector<std::string> kMethods = {"analytic",   "stationary",         "slow",
                                           "ode-oracle", "volterra-continuum", "volterra-finite-tau"};

PropagatorSeries run_method(const std::string& method, const TimeGrid& grid,
                            const PhysicalParams& p) {
    if (method == "stationary") return p_stationary(grid, p);
    if (method == "slow") return p_slow(grid, reduce(p));
    if (method == "ode-oracle") return p_ode_oracle(grid, p);
    if (method == "volterra-continuum") return p_volterra_continuum(grid, p);
    if (method == "volterra-finite-tau") {
        if (p.continuum())
            throw std::invalid_argument("invalid-params: volterra-finite-tau requires --tau");
        return p_volterra_oracle(grid, p,
                                 [&p](double t, double s) { return kernel_finite_tau(t, s, p); });
    }
    return p_analytic(grid, reduce(p));
}

void validate_method_config(const std::string& method, const PhysicalParams& p) {
    if (method == "stationary" && p.beta != 0.0)
        throw std::invalid_argument("invalid-params: method stationary requires beta = 0");
    if (method != "volterra-finite-tau" && !p.continuum())
        throw std::invalid_argument(
            "invalid-params: --tau is only used by method volterra-finite-tau");
}

void write_series_csv(const std::string& path, const PhysicalParams& p, const std::string& method,
                      const PropagatorSeries& series) {
    CsvWriter w(path);
    w.comment("method = " + method);
    w.comment("gamma0 = " + format_number(p.gamma0));
    w.comment("lambda = " + format_number(p.lambda));
    w.comment("omega0 = " + format_number(p.omega0));
    w.comment("delta = " + format_number(p.delta));
    w.comment("beta = " + format_number(p.beta));
    if (!p.continuum()) {
        w.comment("tau = " + format_number(p.tau));
        w.comment("boundary-affected for x < " + format_number(2.0 * p.gamma0 * p.tau));
    }
    w.header({"x", "re_p", "im_p", "abs_p"});
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        const Complex v = series.values[i];
        w.row({series.grid.point(static_cast<int>(i)), v.real(), v.imag(), std::abs(v)});
    }
}

std::vector<double> parse_values(const std::string& csv_list) {
    std::vector<double> out;
    std::stringstream ss(csv_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"decolab — entanglement dynamics of moving qubits in leaky cavities"};
    app.set_config("--config", "", "flat key=value config file; flags take precedence");

    PhysicalParams params;
    double tau_in = std::numeric_limits<double>::quiet_NaN();
    GridOpts gridopts;
    MethodOpt method;
    double a_amp = 1.0 / std::sqrt(2.0);
    double delta_phase = 0.0;
    std::string output = "out.csv";
    std::string out_dir = ".";
    std::string axis = "detuning";
    std::string values_list;
    double sweep_from = 0.0, sweep_to = 30.0;
    int sweep_count = 21;
    std::string fit_input;
    std::string figure_id;

    auto* propagate = app.add_subcommand("propagate", "compute the amplitude P on a time grid");
    add_param_options(propagate, params, tau_in);
    add_grid_options(propagate, gridopts);
    propagate->add_option("--method", method.name, "solver")
        ->transform(CLI::IsMember(kMethods))
        ->capture_default_str();
    propagate->add_option("--output,-o", output, "output CSV")->capture_default_str();

    auto* conc = app.add_subcommand("concurrence", "compute the concurrence trajectory");
    add_param_options(conc, params, tau_in);
    add_grid_options(conc, gridopts);
    conc->add_option("--method", method.name, "solver")
        ->transform(CLI::IsMember(kMethods))
        ->capture_default_str();
    conc->add_option("--a", a_amp, "initial amplitude of |00>")->capture_default_str();
    conc->add_option("--delta-phase", delta_phase, "phase of b (radians)")->capture_default_str();
    conc->add_option("--output,-o", output, "output CSV")->capture_default_str();

    auto* esd = app.add_subcommand("esd", "locate entanglement sudden death");
    add_param_options(esd, params, tau_in);
    add_grid_options(esd, gridopts);
    esd->add_option("--a", a_amp, "initial amplitude of |00>")->capture_default_str();
    esd->add_option("--output,-o", output, "optional CSV for the report");

    auto* roe = app.add_subcommand("roe", "classify revival of entanglement");
    add_param_options(roe, params, tau_in);
    add_grid_options(roe, gridopts);
    roe->add_option("--a", a_amp, "initial amplitude of |00>")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "sweep ESD times along detuning or velocity");
    add_param_options(sweep, params, tau_in);
    sweep->add_option("--axis", axis, "sweep axis")
        ->transform(CLI::IsMember({"detuning", "velocity"}))
        ->capture_default_str();
    sweep->add_option("--a", a_amp, "initial amplitude of |00>")->capture_default_str();
    sweep->add_option("--values", values_list, "comma-separated axis values");
    sweep->add_option("--from", sweep_from, "axis start")->capture_default_str();
    sweep->add_option("--to", sweep_to, "axis end")->capture_default_str();
    sweep->add_option("--count", sweep_count, "number of points")->capture_default_str();
    sweep->add_option("--output,-o", output, "output CSV")->capture_default_str();

    auto* fit = app.add_subcommand("fit", "quadratic least-squares fit of a sweep CSV");
    fit->add_option("--input,-i", fit_input, "sweep CSV (param,x_star)")->required();

    auto* figure = app.add_subcommand("figure", "emit a reference figure dataset");
    figure->add_option("id", figure_id, "figure id (fig1 .. fig6b) or 'all'")->required();
    figure->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (!std::isnan(tau_in)) params.tau = tau_in;
    params.validate();

    if (propagate->parsed() || conc->parsed()) {
        validate_method_config(method.name, params);
        const TimeGrid grid = resolve_grid(gridopts, params);
        const PropagatorSeries series = run_method(method.name, grid, params);
        if (propagate->parsed()) {
            write_series_csv(output, params, method.name, series);
        } else {
            const InitialState state = InitialState::from_amplitude(a_amp, delta_phase);
            const ConcurrenceSeries c = concurrence(series, state);
            CsvWriter w(output);
            w.comment("method = " + method.name);
            w.comment("a = " + format_number(state.a));
            w.comment("lambda = " + format_number(params.lambda));
            w.comment("delta = " + format_number(params.delta));
            w.comment("beta = " + format_number(params.beta));
            w.comment("omega0 = " + format_number(params.omega0));
            w.header({"x", "c"});
            for (std::size_t i = 0; i < c.values.size(); ++i)
                w.row({c.grid.point(static_cast<int>(i)), c.values[i]});
        }
        std::cout << "wrote " << output << "\n";
        return 0;
    }

    if (esd->parsed()) {
        const InitialState state = InitialState::from_amplitude(a_amp);
        EsdReport report;
        if (gridopts.x_end > 0.0) {
            report = find_esd(params, state, resolve_grid(gridopts, params));
        } else {
            // Adaptive horizon via a single-point sweep on the current axis value.
            const auto pts = sweep_esd(params, state, SweepAxis::Velocity, {params.beta});
            if (!pts[0].ok && pts[0].status.rfind("no-esd", 0) != 0)
                throw NumericError(pts[0].status);
            report.esd_occurs = pts[0].ok;
            report.x_star = pts[0].x_star;
        }
        std::cout << "esd_occurs " << (report.esd_occurs ? "true" : "false") << "\n";
        if (report.esd_occurs)
            std::cout << "x_star " << format_number(report.x_star) << "\n";
        for (const auto& [lo, hi] : report.zero_intervals)
            std::cout << "zero_interval " << format_number(lo) << " " << format_number(hi) << "\n";
        if (esd->count("--output") > 0) {
            CsvWriter w(output);
            w.header({"esd_occurs", "x_star"});
            w.row({report.esd_occurs ? 1.0 : 0.0, report.esd_occurs ? report.x_star : 0.0});
        }
        return 0;
    }

    if (roe->parsed()) {
        const InitialState state = InitialState::from_amplitude(a_amp);
        TimeGrid grid = resolve_grid(gridopts, params);
        if (gridopts.x_end <= 0.0 && params.lambda / params.gamma0 < 1.0)
            grid = TimeGrid{0.0, 300.0, 30001};  // revivals sit late in strong coupling
        const ConcurrenceSeries c = concurrence(p_analytic(grid, reduce(params)), state);
        const RoeReport report = detect_roe(c);
        std::cout << "roe_occurs " << (report.roe_occurs ? "true" : "false") << "\n";
        for (double t : report.revival_times)
            std::cout << "revival_x " << format_number(t) << "\n";
        return 0;
    }

    if (sweep->parsed()) {
        const InitialState state = InitialState::from_amplitude(a_amp);
        std::vector<double> values;
        if (!values_list.empty()) {
            values = parse_values(values_list);
        } else {
            for (int i = 0; i < sweep_count; ++i)
                values.push_back(sweep_from + (sweep_to - sweep_from) * i /
                                 std::max(1, sweep_count - 1));
        }
        const SweepAxis ax = axis == "velocity" ? SweepAxis::Velocity : SweepAxis::Detuning;
        const auto points = sweep_esd(params, state, ax, values);
        CsvWriter w(output);
        w.comment("axis = " + axis);
        w.comment("a = " + format_number(state.a));
        w.comment("lambda = " + format_number(params.lambda));
        w.comment("omega0 = " + format_number(params.omega0));
        w.header({"param", "x_star"});
        for (const auto& pt : points) {
            if (pt.ok)
                w.row({pt.value, pt.x_star});
            else
                std::cout << "point " << format_number(pt.value) << " skipped: " << pt.status
                          << "\n";
        }
        std::cout << "wrote " << output << "\n";
        return 0;
    }

    if (fit->parsed()) {
        std::ifstream in(fit_input);
        if (!in) throw std::invalid_argument("invalid-params: cannot read " + fit_input);
        std::vector<std::pair<double, double>> pts;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || !(std::isdigit(line[0]) || line[0] == '-'))
                continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) continue;
            pts.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        }
        const QuadraticFit f = fit_quadratic(pts);
        std::cout << "c2 " << format_number(f.c2) << "\n"
                  << "c1 " << format_number(f.c1) << "\n"
                  << "c0 " << format_number(f.c0) << "\n"
                  << "rms_residual " << format_number(f.rms_residual) << "\n";
        return 0;
    }

    if (figure->parsed()) {
        std::vector<std::string> ids;
        if (figure_id == "all")
            ids = figure_ids();
        else
            ids.push_back(figure_id);
        for (const auto& id : ids) {
            const FigureResult r = emit_figure(id, out_dir);
            for (const auto& f : r.files) std::cout << "wrote " << f << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const decolab::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
