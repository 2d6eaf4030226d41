#include "decolab/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "decolab/errors.hpp"
#include "decolab/parallel.hpp"

namespace decolab {

namespace {

constexpr double kBisectTolX = 1e-8;
constexpr double kMaxSampleJump = 0.05;

double clamp_population(double y) { return std::min(y, 1.0); }

// Bisect h(x) - eps_zero on [lo, hi] with h(lo) > eps_zero >= h(hi).
template <typename F>
double bisect_exit(F&& inner, double lo, double hi, double eps_zero) {
    for (int it = 0; it < 200 && hi - lo > kBisectTolX; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (inner(mid) > eps_zero)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double concurrence_inner(double abs_p_squared, const InitialState& s) {
    s.validate();
    const double y = clamp_population(abs_p_squared);
    return 2.0 * s.b_mag * y * (s.a - s.b_mag * (1.0 - y));
}

ConcurrenceSeries concurrence(const PropagatorSeries& p, const InitialState& s) {
    s.validate();
    check_series(p, 1e-6);
    ConcurrenceSeries out;
    out.grid = p.grid;
    out.values.resize(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double y = clamp_population(std::norm(p.values[i]));
        out.values[i] = std::max(0.0, concurrence_inner(y, s));
    }
    return out;
}

EsdReport find_esd(const PhysicalParams& p, const InitialState& s, const TimeGrid& horizon,
                   const ClassifyThresholds& th) {
    horizon.validate();
    if (horizon.x_start != 0.0)
        throw std::invalid_argument("invalid-params: ESD horizon must start at x = 0");
    s.validate();
    const ReducedParams r = reduce(p);
    const AmplitudeEvaluator amp(r);
    const auto inner = [&](double x) { return concurrence_inner(std::norm(amp(x)), s); };

    const int n = horizon.n_points;
    std::vector<double> h(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = inner(horizon.point(i));

    if (h.back() > th.eps_zero)
        throw NumericError("horizon-too-short: concurrence still positive at the final grid point");

    EsdReport report;
    // Sudden death needs the inner expression to actually cross below zero;
    // a >= |b| trajectories only touch zero where P vanishes.
    const double h_min = *std::min_element(h.begin(), h.end());
    report.esd_occurs = h_min < -th.eps_zero;

    // Zero intervals of the clamped concurrence, endpoints refined.
    int i = 0;
    while (i < n) {
        if (h[static_cast<std::size_t>(i)] <= th.eps_zero) {
            int j = i;
            while (j + 1 < n && h[static_cast<std::size_t>(j + 1)] <= th.eps_zero) ++j;
            double lo = horizon.point(i);
            double hi = horizon.point(j);
            if (i > 0) lo = bisect_exit(inner, horizon.point(i - 1), lo, th.eps_zero);
            if (j + 1 < n) {
                // Entry into positivity: bisect with the roles swapped.
                double a = horizon.point(j), b = horizon.point(j + 1);
                for (int it = 0; it < 200 && b - a > kBisectTolX; ++it) {
                    const double mid = 0.5 * (a + b);
                    if (inner(mid) <= th.eps_zero)
                        a = mid;
                    else
                        b = mid;
                }
                hi = 0.5 * (a + b);
            }
            report.zero_intervals.emplace_back(lo, hi);
            i = j + 1;
        } else {
            ++i;
        }
    }

    if (report.esd_occurs) {
        int last_alive = -1;
        for (int k = n - 1; k >= 0; --k) {
            if (h[static_cast<std::size_t>(k)] > th.eps_zero) {
                last_alive = k;
                break;
            }
        }
        if (last_alive < 0) {
            report.x_star = 0.0;  // dead from the first sample
        } else {
            report.x_star = bisect_exit(inner, horizon.point(last_alive),
                                        horizon.point(last_alive + 1), th.eps_zero);
        }
    }
    return report;
}

RoeReport detect_roe(const ConcurrenceSeries& c, const ClassifyThresholds& th) {
    c.grid.validate();
    const std::size_t n = c.values.size();
    if (n < 3) throw std::invalid_argument("invalid-params: concurrence series too short");
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(c.values[i] - c.values[i - 1]) > kMaxSampleJump)
            throw NumericError("grid-too-coarse: concurrence moves more than 0.05 between samples");
    }

    RoeReport report;
    std::size_t i = 0;
    double alive_before = 0.0;
    while (i < n) {
        if (c.values[i] <= th.eps_zero) {
            std::size_t j = i;
            while (j + 1 < n && c.values[j + 1] <= th.eps_zero) ++j;
            const double width = c.grid.point(static_cast<int>(j)) - c.grid.point(static_cast<int>(i));
            if (width >= th.w_min && alive_before > th.eps_live) {
                // Revival must happen before the next zero interval (or the end).
                for (std::size_t k = j + 1; k < n && c.values[k] > th.eps_zero; ++k) {
                    if (c.values[k] > th.eps_live) {
                        report.roe_occurs = true;
                        report.revival_times.push_back(c.grid.point(static_cast<int>(k)));
                        break;
                    }
                }
            }
            i = j + 1;
        } else {
            alive_before = std::max(alive_before, c.values[i]);
            ++i;
        }
    }
    return report;
}

namespace {

// Horizon policy: grow until the trajectory is certifiably dead at the end,
// then make sure the horizon is at least 3x the located death time.
EsdReport esd_with_adaptive_horizon(const PhysicalParams& p, const InitialState& s) {
    constexpr double kHorizonMax = 20000.0;
    constexpr double kTargetSpacing = 0.005;
    double horizon = 30.0;
    for (;;) {
        const int n =
            std::clamp(static_cast<int>(horizon / kTargetSpacing) + 1, 2001, 400001);
        try {
            EsdReport rep = find_esd(p, s, TimeGrid{0.0, horizon, n});
            if (rep.esd_occurs && horizon < 3.0 * rep.x_star) {
                horizon = 3.5 * rep.x_star;
                continue;
            }
            return rep;
        } catch (const NumericError&) {
            if (horizon >= kHorizonMax) throw;
            horizon *= 2.0;
        }
    }
}

}  // namespace

std::vector<SweepPoint> sweep_esd(const PhysicalParams& p, const InitialState& s, SweepAxis axis,
                                  const std::vector<double>& values) {
    p.validate();
    s.validate();
    std::vector<SweepPoint> out(values.size());
    parallel_for_index(static_cast<int>(values.size()), [&](int idx) {
        const double v = values[static_cast<std::size_t>(idx)];
        SweepPoint& pt = out[static_cast<std::size_t>(idx)];
        pt.value = v;
        PhysicalParams q = p;
        if (axis == SweepAxis::Detuning)
            q.delta = v * p.gamma0;
        else
            q.beta = v;
        try {
            const EsdReport rep = esd_with_adaptive_horizon(q, s);
            if (!rep.esd_occurs) {
                pt.ok = false;
                pt.status = "no-esd: inner expression never crosses zero";
            } else {
                pt.ok = true;
                pt.x_star = rep.x_star;
                pt.status = "ok";
            }
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.status = e.what();
        }
    });
    return out;
}

QuadraticFit fit_quadratic(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> zs;
    for (const auto& [z, y] : points) {
        if (std::find(zs.begin(), zs.end(), z) == zs.end()) zs.push_back(z);
    }
    if (zs.size() < 3)
        throw std::invalid_argument("rank-deficient: quadratic fit needs >= 3 distinct abscissae");

    // Normal equations in long double; the design matrix is tiny.
    long double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
    for (const auto& [z, y] : points) {
        const long double zl = z, yl = y;
        const long double z2 = zl * zl;
        s0 += 1;
        s1 += zl;
        s2 += z2;
        s3 += z2 * zl;
        s4 += z2 * z2;
        t0 += yl;
        t1 += zl * yl;
        t2 += z2 * yl;
    }
    // Solve [[s4 s3 s2][s3 s2 s1][s2 s1 s0]] (c2 c1 c0)^T = (t2 t1 t0)^T.
    const long double det = s4 * (s2 * s0 - s1 * s1) - s3 * (s3 * s0 - s1 * s2) +
                            s2 * (s3 * s1 - s2 * s2);
    if (std::abs(static_cast<double>(det)) < 1e-30)
        throw std::invalid_argument("rank-deficient: singular normal equations");
    const long double d2 = t2 * (s2 * s0 - s1 * s1) - s3 * (t1 * s0 - s1 * t0) +
                           s2 * (t1 * s1 - s2 * t0);
    const long double d1 = s4 * (t1 * s0 - t0 * s1) - t2 * (s3 * s0 - s1 * s2) +
                           s2 * (s3 * t0 - s2 * t1);
    const long double d0 = s4 * (s2 * t0 - s1 * t1) - s3 * (s3 * t0 - s2 * t1) +
                           t2 * (s3 * s1 - s2 * s2);

    QuadraticFit fit;
    fit.c2 = static_cast<double>(d2 / det);
    fit.c1 = static_cast<double>(d1 / det);
    fit.c0 = static_cast<double>(d0 / det);
    long double ss = 0;
    for (const auto& [z, y] : points) {
        const long double e = y - (fit.c2 * z * z + fit.c1 * z + fit.c0);
        ss += e * e;
    }
    fit.rms_residual = static_cast<double>(std::sqrt(static_cast<double>(ss / s0)));
    return fit;
}

}  // namespace decolab
