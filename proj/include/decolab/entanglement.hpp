// entanglement.hpp — Concurrence trajectories and their classification.
//
// For the initial family a|00> + b|11> the two-qubit concurrence is the
// closed form C = max[0, 2|b||P|^2 (a - |b|(1 - |P|^2))]; only |P| enters.
// ESD (sudden death) is located on the smooth inner expression, ROE
// (revival) on zero intervals of the clamped trajectory.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "decolab/params.hpp"
#include "decolab/propagator.hpp"

namespace decolab {

struct ConcurrenceSeries {
    TimeGrid grid;
    std::vector<double> values;  // each in [0, 1]
};

struct EsdReport {
    bool esd_occurs{false};
    double x_star{0.0};  // meaningful only when esd_occurs
    std::vector<std::pair<double, double>> zero_intervals;  // disjoint, sorted
};

struct RoeReport {
    bool roe_occurs{false};
    std::vector<double> revival_times;  // strictly increasing; nonempty iff roe_occurs
};

struct QuadraticFit {
    double c2{0.0}, c1{0.0}, c0{0.0};  // y = c2 z^2 + c1 z + c0
    double rms_residual{0.0};
};

// Concurrence is exactly zero wherever the clamp engages; the thresholds
// only guard float noise and grid discreteness.
struct ClassifyThresholds {
    double eps_zero{1e-12};  // C at or below this counts as zero
    double eps_live{1e-4};   // C above this counts as alive
    double w_min{0.05};      // minimum zero-interval width (scaled time)
};

// The smooth expression inside the clamp, 2|b| y (a - |b|(1 - y)), y = |P|^2.
double concurrence_inner(double abs_p_squared, const InitialState& s);

ConcurrenceSeries concurrence(const PropagatorSeries& p, const InitialState& s);

// Scans the analytic concurrence over the horizon, then bisects the last
// exit from positivity to 1e-8 in x. Throws NumericError("horizon-too-short")
// when the trajectory is still alive at the final grid point.
EsdReport find_esd(const PhysicalParams& p, const InitialState& s, const TimeGrid& horizon,
                   const ClassifyThresholds& th = {});

// Revival: alive, then a zero interval of width >= w_min, then alive again.
// Throws NumericError("grid-too-coarse") if C moves more than 0.05 between
// neighbouring samples.
RoeReport detect_roe(const ConcurrenceSeries& c, const ClassifyThresholds& th = {});

enum class SweepAxis { Detuning, Velocity };

struct SweepPoint {
    double value{0.0};
    double x_star{0.0};
    bool ok{false};
    std::string status;  // "ok" or the error message
};

// Runs find_esd per value (horizon grown adaptively, >= 3x the first
// zero-crossing estimate), holding the other parameters fixed. Points are
// evaluated in parallel but returned in input order.
std::vector<SweepPoint> sweep_esd(const PhysicalParams& p, const InitialState& s, SweepAxis axis,
                                  const std::vector<double>& values);

// Ordinary least squares on {1, z, z^2}; exact on quadratic data. Throws
// std::invalid_argument("rank-deficient") with fewer than 3 distinct z.
QuadraticFit fit_quadratic(const std::vector<std::pair<double, double>>& points);

}  // namespace decolab
