#include "decolab/figures.hpp"

#include <cmath>

#include "decolab/csv.hpp"
#include "decolab/entanglement.hpp"
#include "decolab/parallel.hpp"
#include "decolab/propagator.hpp"

namespace decolab {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::string join(const std::string& dir, const std::string& name) {
    if (dir.empty()) return name;
    if (dir.back() == '/') return dir + name;
    return dir + "/" + name;
}

void comment_params(CsvWriter& w, const PhysicalParams& p) {
    w.comment("gamma0 = " + format_number(p.gamma0));
    w.comment("lambda = " + format_number(p.lambda));
    w.comment("omega0 = " + format_number(p.omega0));
    w.comment("delta = " + format_number(p.delta));
    w.comment("beta = " + format_number(p.beta));
}

std::string write_propagator(const std::string& path, const std::string& figure,
                             const PhysicalParams& p, const PropagatorSeries& series) {
    CsvWriter w(path);
    w.comment("figure " + figure);
    comment_params(w, p);
    w.header({"x", "re_p", "im_p", "abs_p"});
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        const Complex v = series.values[i];
        w.row({series.grid.point(static_cast<int>(i)), v.real(), v.imag(), std::abs(v)});
    }
    return path;
}

std::string write_concurrence(const std::string& path, const std::string& figure,
                              const PhysicalParams& p, double a, const ConcurrenceSeries& series) {
    CsvWriter w(path);
    w.comment("figure " + figure);
    comment_params(w, p);
    w.comment("a = " + format_number(a));
    w.header({"x", "c"});
    for (std::size_t i = 0; i < series.values.size(); ++i)
        w.row({series.grid.point(static_cast<int>(i)), series.values[i]});
    return path;
}

std::string write_sweep(const std::string& path, const std::string& figure,
                        const PhysicalParams& p, double a, const std::string& axis,
                        const std::vector<SweepPoint>& points) {
    CsvWriter w(path);
    w.comment("figure " + figure);
    comment_params(w, p);
    w.comment("a = " + format_number(a));
    w.comment("axis = " + axis);
    w.header({"param", "x_star"});
    for (const auto& pt : points) {
        if (pt.ok) w.row({pt.value, pt.x_star});
    }
    return path;
}

// Long-format surface over initial amplitude a and scaled time.
std::string write_surface(const std::string& path, const std::string& figure,
                          const PhysicalParams& p, const std::vector<double>& a_values,
                          const TimeGrid& grid) {
    const PropagatorSeries series = p_analytic(grid, reduce(p));
    std::vector<ConcurrenceSeries> rows(a_values.size());
    parallel_for_index(static_cast<int>(a_values.size()), [&](int i) {
        rows[static_cast<std::size_t>(i)] =
            concurrence(series, InitialState::from_amplitude(a_values[static_cast<std::size_t>(i)]));
    });
    CsvWriter w(path);
    w.comment("figure " + figure);
    comment_params(w, p);
    w.header({"a", "x", "c"});
    for (std::size_t ia = 0; ia < a_values.size(); ++ia) {
        for (std::size_t ix = 0; ix < rows[ia].values.size(); ++ix)
            w.row({a_values[ia], grid.point(static_cast<int>(ix)), rows[ia].values[ix]});
    }
    return path;
}

std::vector<double> uniform_a_grid() {
    std::vector<double> a;
    for (int i = 0; i <= 36; ++i) a.push_back(0.05 + 0.025 * i);  // 0.05 .. 0.95
    return a;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig1",  "fig2a", "fig2b", "fig3a",
                                                 "fig3b", "fig4a", "fig4b", "fig5a",
                                                 "fig5b", "fig5c", "fig6a", "fig6b"};
    return ids;
}

FigureResult emit_figure(const std::string& id, const std::string& out_dir) {
    FigureResult result;
    auto path = [&](const std::string& name) { return join(out_dir, name); };

    if (id == "fig1") {
        // Equal beta*omega0 pairs; the series differ, so the dynamics depend
        // on beta and omega0 individually. The long grid makes the slow-mode
        // frequency split visible.
        const TimeGrid grid{0.0, 100.0, 10001};
        const PhysicalParams first{1.0, 1.5, 10.0, 100.0, 0.01};
        const PhysicalParams second{1.0, 1.5, 0.5, 100.0, 0.2};
        result.files.push_back(write_propagator(path("fig1_series1.csv"), id, first,
                                                p_analytic(grid, reduce(first))));
        result.files.push_back(write_propagator(path("fig1_series2.csv"), id, second,
                                                p_analytic(grid, reduce(second))));
        return result;
    }
    if (id == "fig2a" || id == "fig2b") {
        const bool markovian = id == "fig2a";
        const double lambda = markovian ? 2.0 : 0.01;
        const TimeGrid grid = markovian ? TimeGrid{0.0, 30.0, 3001} : TimeGrid{0.0, 50.0, 5001};
        const std::vector<double> deltas =
            markovian ? std::vector<double>{0.0, 3.0, 5.0, 8.0, 15.0, 30.0}
                      : std::vector<double>{0.0, 0.05, 0.5};
        for (double d : deltas) {
            const PhysicalParams p{1.0, lambda, 0.0, d, 0.0};
            result.files.push_back(write_propagator(path(id + "_x3_" + format_number(d) + ".csv"),
                                                    id, p, p_analytic(grid, reduce(p))));
        }
        return result;
    }
    if (id == "fig3a") {
        const TimeGrid grid{0.0, 300.0, 30001};
        const InitialState state = InitialState::from_amplitude(0.4);
        for (double d : {0.0, 3.0, 5.0, 8.0, 15.0, 30.0}) {
            const PhysicalParams p{1.0, 2.0, 0.0, d, 0.0};
            result.files.push_back(
                write_concurrence(path(id + "_x3_" + format_number(d) + ".csv"), id, p, state.a,
                                  concurrence(p_analytic(grid, reduce(p)), state)));
        }
        return result;
    }
    if (id == "fig3b") {
        const PhysicalParams p{1.0, 2.0, 0.0, 0.0, 0.0};
        const InitialState state = InitialState::from_amplitude(0.4);
        const auto points = sweep_esd(p, state, SweepAxis::Detuning, linspace(0.0, 30.0, 21));
        result.files.push_back(
            write_sweep(path("fig3b_sweep.csv"), id, p, state.a, "detuning", points));
        return result;
    }
    if (id == "fig4a") {
        const TimeGrid grid{0.0, 10.0, 2001};
        const InitialState state = InitialState::from_amplitude(0.4);
        for (double b : {0.0, 0.05, 0.1, 0.15, 0.2, 0.25}) {
            const PhysicalParams p{1.0, 2.0, 20.0, 0.0, b};
            result.files.push_back(
                write_concurrence(path(id + "_beta_" + format_number(b) + ".csv"), id, p, state.a,
                                  concurrence(p_analytic(grid, reduce(p)), state)));
        }
        return result;
    }
    if (id == "fig4b") {
        const PhysicalParams p{1.0, 2.0, 20.0, 0.0, 0.0};
        const InitialState state = InitialState::from_amplitude(0.4);
        const auto points = sweep_esd(p, state, SweepAxis::Velocity, linspace(0.0, 0.25, 26));
        result.files.push_back(
            write_sweep(path("fig4b_sweep.csv"), id, p, state.a, "velocity", points));
        return result;
    }
    if (id == "fig5a" || id == "fig5b" || id == "fig5c") {
        const double delta = id == "fig5a" ? 0.0 : (id == "fig5b" ? 0.05 : 0.5);
        const PhysicalParams p{1.0, 0.005, 0.0, delta, 0.0};
        result.files.push_back(write_surface(path(id + "_surface.csv"), id, p, uniform_a_grid(),
                                             TimeGrid{0.0, 300.0, 3001}));
        if (id == "fig5a") {
            // Highlighted slice at the maximally entangled initial state.
            const TimeGrid dense{0.0, 300.0, 30001};
            const InitialState state = InitialState::from_amplitude(kInvSqrt2);
            result.files.push_back(
                write_concurrence(path("fig5a_slice.csv"), id, p, state.a,
                                  concurrence(p_analytic(dense, reduce(p)), state)));
        }
        return result;
    }
    if (id == "fig6a" || id == "fig6b") {
        const double beta = id == "fig6a" ? 0.003 : 0.01;
        const PhysicalParams p{1.0, 0.005, 20.0, 0.0, beta};
        result.files.push_back(write_surface(path(id + "_surface.csv"), id, p, uniform_a_grid(),
                                             TimeGrid{0.0, 300.0, 3001}));
        return result;
    }
    throw std::invalid_argument("invalid-params: unknown figure id '" + id + "'");
}

}  // namespace decolab
