#include "decolab/propagator.hpp"

#include <cmath>

#include "decolab/errors.hpp"

namespace decolab {

namespace {

constexpr double kDegenerateRel = 1e-8;

// sinh(z)/z, stable at the origin.
Complex sinhc(Complex z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

struct Numerator {
    Complex sum_u;   // u+ + u-
    Complex prod_u;  // u+ u-
    Complex eval(Complex z) const { return (z + sum_u) * z + prod_u; }
    Complex deriv(Complex z) const { return 2.0 * z + sum_u; }
};

}  // namespace

void check_series(const PropagatorSeries& s, double tol) {
    if (s.grid.x_start == 0.0 && !s.values.empty() &&
        std::abs(s.values.front() - Complex(1.0)) > 1e-12)
        throw NumericError("contractivity: P(0) deviates from 1 by more than 1e-12");
    for (const auto& v : s.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericError("contractivity: non-finite propagator value");
        if (std::abs(v) > 1.0 + tol)
            throw NumericError("contractivity: |P| exceeds 1 beyond tolerance");
    }
}

Complex p_hat(Complex pvar, const ReducedParams& r) {
    const auto [up, um] = u_pm(r);
    const CubicRoots roots = solve_cubic(cubic_coefficients(r));
    Complex denom = 1.0;
    for (const auto& q : roots.q) {
        const Complex d = pvar - q;
        if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(q)))
            throw NumericError("pole-proximity: p coincides with a propagator pole");
        denom *= d;
    }
    return (pvar + up) * (pvar + um) / denom;
}

AmplitudeEvaluator::AmplitudeEvaluator(const CubicRoots& roots, const ReducedParams& r) {
    const auto [up, um] = u_pm(r);
    const Numerator num{up + um, up * um};
    const auto& q = roots.q;

    double max_mag = 1e-300;
    for (const auto& qq : q) max_mag = std::max(max_mag, std::abs(qq));
    const double close = kDegenerateRel * max_mag;
    const double d01 = std::abs(q[0] - q[1]);
    const double d02 = std::abs(q[0] - q[2]);
    const double d12 = std::abs(q[1] - q[2]);

    if (!roots.degenerate) {
        form_ = Form::Distinct;
        q_ = q;
        for (int j = 0; j < 3; ++j) {
            Complex denom = 1.0;
            for (int k = 0; k < 3; ++k)
                if (k != j) denom *= q[j] - q[k];
            res_[static_cast<std::size_t>(j)] = num.eval(q[j]) / denom;
        }
        return;
    }

    if (d01 <= close && d02 <= close && d12 <= close) {
        // Triple pole: residue of N(z) e^{zx} / (z - q)^3, N monic quadratic,
        // gives e^{qx} (1 + N'(q) x + N(q) x^2 / 2).
        form_ = Form::TriplePole;
        const Complex qc = (q[0] + q[1] + q[2]) / 3.0;
        q_ = {qc, qc, qc};
        res_ = {1.0, num.deriv(qc), num.eval(qc) / 2.0};
        return;
    }

    // Double pole at the closest pair, simple pole at the remaining root:
    // P = A e^{qs x} + (B + C x) e^{qd x}.
    form_ = Form::DoublePole;
    int k = 2;
    if (d02 <= d01 && d02 <= d12) k = 1;
    else if (d12 <= d01 && d12 <= d02) k = 0;
    const Complex qs = q[static_cast<std::size_t>(k)];
    const Complex qd = 0.5 * ((k == 0 ? q[1] : q[0]) + (k == 2 ? q[1] : q[2]));
    const Complex gap = qd - qs;
    q_ = {qs, qd, qd};
    res_ = {num.eval(qs) / (gap * gap),
            num.deriv(qd) / gap - num.eval(qd) / (gap * gap),
            num.eval(qd) / gap};
}

AmplitudeEvaluator::AmplitudeEvaluator(const ReducedParams& r)
    : AmplitudeEvaluator(solve_cubic(cubic_coefficients(r)), r) {}

Complex AmplitudeEvaluator::operator()(double x) const {
    switch (form_) {
        case Form::Distinct:
            return res_[0] * std::exp(q_[0] * x) + res_[1] * std::exp(q_[1] * x) +
                   res_[2] * std::exp(q_[2] * x);
        case Form::TriplePole:
            return std::exp(q_[0] * x) * (res_[0] + res_[1] * x + res_[2] * x * x);
        case Form::DoublePole:
        default:
            return res_[0] * std::exp(q_[0] * x) + (res_[1] + res_[2] * x) * std::exp(q_[1] * x);
    }
}

PropagatorSeries residue_series(const TimeGrid& grid, const CubicRoots& roots,
                                const ReducedParams& r) {
    grid.validate();
    const AmplitudeEvaluator eval(roots, r);
    PropagatorSeries out;
    out.grid = grid;
    out.values.resize(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i)
        out.values[static_cast<std::size_t>(i)] = eval(grid.point(i));
    return out;
}

PropagatorSeries p_analytic(const TimeGrid& grid, const ReducedParams& r) {
    const CubicRoots roots = solve_cubic(cubic_coefficients(r));
    PropagatorSeries out = residue_series(grid, roots, r);
    check_series(out, 1e-9);
    return out;
}

PropagatorSeries p_stationary(const TimeGrid& grid, const PhysicalParams& p) {
    grid.validate();
    p.validate();
    if (p.beta != 0.0)
        throw std::invalid_argument("invalid-params: stationary form requires beta = 0");

    const Complex lbar(p.lambda, -p.delta);
    const Complex omega = std::sqrt(lbar * lbar - p.gamma0 * p.lambda);

    PropagatorSeries out;
    out.grid = grid;
    out.values.resize(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) {
        const double t = grid.point(i) / p.gamma0;
        const Complex z = omega * t / 2.0;
        Complex v;
        if (std::abs(z) <= 30.0) {
            v = std::exp(-lbar * t / 2.0) * (std::cosh(z) + (lbar * t / 2.0) * sinhc(z));
        } else {
            // Merge the exponents; Re(omega) < lambda keeps both decaying.
            const Complex cpl = lbar / omega;
            v = 0.5 * ((1.0 + cpl) * std::exp((omega - lbar) * t / 2.0) +
                       (1.0 - cpl) * std::exp(-(omega + lbar) * t / 2.0));
        }
        out.values[static_cast<std::size_t>(i)] = v;
    }
    check_series(out, 1e-9);
    return out;
}

PropagatorSeries p_slow(const TimeGrid& grid, const ReducedParams& r) {
    r.validate();
    if (r.beta > 0.05)
        throw std::invalid_argument("invalid-params: perturbative propagator requires beta <= 0.05");
    const CubicRoots roots = roots_slow(r);
    PropagatorSeries out = residue_series(grid, roots, r);
    check_series(out, 1e-9);
    return out;
}

}  // namespace decolab
