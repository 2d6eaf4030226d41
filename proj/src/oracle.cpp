#include "decolab/oracle.hpp"

#include <cmath>
#include <vector>

#include "decolab/errors.hpp"
#include "decolab/kernel.hpp"

namespace decolab {

namespace {

struct OdeState {
    Complex p{1.0};       // amplitude, P(0) = 1
    Complex y_plus{0.0};  // convolution accumulators, zero at t = 0
    Complex y_minus{0.0};
};

// One RK4 step of P' = -(y+ + y-), y±' = -u± y± + (x1/8) P in scaled time.
class OdeSystem {
 public:
    OdeSystem(Complex u_plus, Complex u_minus, double x1)
        : up_(u_plus), um_(u_minus), c_(x1 / 8.0) {}

    OdeState derivative(const OdeState& s) const {
        return {-(s.y_plus + s.y_minus), -up_ * s.y_plus + c_ * s.p, -um_ * s.y_minus + c_ * s.p};
    }

    OdeState step(const OdeState& s, double h) const {
        const OdeState k1 = derivative(s);
        const OdeState k2 = derivative(shift(s, k1, h / 2.0));
        const OdeState k3 = derivative(shift(s, k2, h / 2.0));
        const OdeState k4 = derivative(shift(s, k3, h));
        return {s.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p),
                s.y_plus + h / 6.0 * (k1.y_plus + 2.0 * k2.y_plus + 2.0 * k3.y_plus + k4.y_plus),
                s.y_minus + h / 6.0 * (k1.y_minus + 2.0 * k2.y_minus + 2.0 * k3.y_minus + k4.y_minus)};
    }

 private:
    static OdeState shift(const OdeState& s, const OdeState& d, double h) {
        return {s.p + h * d.p, s.y_plus + h * d.y_plus, s.y_minus + h * d.y_minus};
    }

    Complex up_, um_;
    double c_;
};

std::vector<Complex> ode_solve(const TimeGrid& grid, const OdeSystem& sys, double step) {
    OdeState s;
    auto advance = [&](double from, double to) {
        const double span = to - from;
        if (span <= 0.0) return;
        const int n = std::max(1, static_cast<int>(std::ceil(span / step)));
        const double h = span / n;
        for (int i = 0; i < n; ++i) s = sys.step(s, h);
    };
    std::vector<Complex> out(static_cast<std::size_t>(grid.n_points));
    advance(0.0, grid.x_start);
    out[0] = s.p;
    for (int i = 1; i < grid.n_points; ++i) {
        advance(grid.point(i - 1), grid.point(i));
        out[static_cast<std::size_t>(i)] = s.p;
    }
    return out;
}

}  // namespace

PropagatorSeries p_ode_oracle(const TimeGrid& grid, const PhysicalParams& p,
                              const OdeOptions& opts) {
    grid.validate();
    if (!p.continuum())
        throw std::invalid_argument("invalid-params: ODE oracle requires the continuum limit");
    if (!(opts.step > 0.0)) throw std::invalid_argument("invalid-params: ODE step must be > 0");
    const ReducedParams r = reduce(p);
    const auto [up, um] = u_pm(r);
    const OdeSystem sys(up, um, r.x1);

    std::vector<Complex> fine = ode_solve(grid, sys, opts.step / 2.0);
    if (opts.richardson_check) {
        const std::vector<Complex> coarse = ode_solve(grid, sys, opts.step);
        double diff = 0.0;
        for (std::size_t i = 0; i < fine.size(); ++i)
            diff = std::max(diff, std::abs(fine[i] - coarse[i]));
        // Fourth-order method: error(h) ~ 16/15 of the h vs h/2 difference.
        if (diff * 16.0 / 15.0 > opts.richardson_tol)
            throw NumericError("step-size too coarse: ODE Richardson estimate exceeds tolerance");
    }

    PropagatorSeries out{grid, std::move(fine)};
    check_series(out, 1e-6);
    return out;
}

namespace {

// Trapezoidal product quadrature with an Euler predictor and trapezoid
// corrector. row(j) must return f(t_i, t_j) for the current step i.
template <typename KernelRow>
PropagatorSeries volterra_solve(const TimeGrid& grid, double gamma0, KernelRow&& row_at) {
    grid.validate();
    if (grid.x_start != 0.0)
        throw std::invalid_argument("invalid-params: Volterra solve must start at x = 0");
    const int n = grid.n_points - 1;
    const double h = grid.spacing() / gamma0;  // physical-time step

    std::vector<Complex> p(static_cast<std::size_t>(n + 1)), dp(static_cast<std::size_t>(n + 1));
    p[0] = 1.0;
    dp[0] = 0.0;

    for (int i = 1; i <= n; ++i) {
        auto row = row_at(i);
        Complex inner = 0.0;
        for (int j = 1; j < i; ++j) inner += row(j) * p[static_cast<std::size_t>(j)];
        const Complex base = h * (0.5 * row(0) * p[0] + inner);
        const Complex self = 0.5 * h * row(i);

        Complex guess = p[static_cast<std::size_t>(i - 1)] + h * dp[static_cast<std::size_t>(i - 1)];
        bool converged = false;
        for (int it = 0; it < 50; ++it) {
            const Complex integral = base + self * guess;
            const Complex next =
                p[static_cast<std::size_t>(i - 1)] +
                0.5 * h * (dp[static_cast<std::size_t>(i - 1)] - integral);
            if (std::abs(next - guess) <= 1e-13 * std::max(1.0, std::abs(next))) {
                guess = next;
                converged = true;
                break;
            }
            guess = next;
        }
        if (!converged) throw NumericError("convergence-failure: Volterra corrector did not settle");
        p[static_cast<std::size_t>(i)] = guess;
        dp[static_cast<std::size_t>(i)] = -(base + self * guess);
    }

    PropagatorSeries out{grid, std::move(p)};
    check_series(out, 1e-6);
    return out;
}

}  // namespace

PropagatorSeries p_volterra_oracle(const TimeGrid& grid, const PhysicalParams& p,
                                   const KernelFn& kernel) {
    p.validate();
    if (!kernel) throw std::invalid_argument("invalid-params: kernel callback is empty");
    const double h = grid.spacing() / p.gamma0;
    return volterra_solve(grid, p.gamma0, [&](int i) {
        const double ti = i * h;
        return [&kernel, ti, h](int j) { return kernel(ti, j * h); };
    });
}

PropagatorSeries p_volterra_continuum(const TimeGrid& grid, const PhysicalParams& p) {
    p.validate();
    if (!p.continuum())
        throw std::invalid_argument("invalid-params: continuum Volterra requires infinite tau");
    grid.validate();
    const KernelParams k(p);
    const int n = grid.n_points - 1;
    const double h = grid.spacing() / p.gamma0;
    // Difference kernel: tabulate g on the mesh once.
    std::vector<Complex> g(static_cast<std::size_t>(n + 1));
    const double amp = p.gamma0 * p.lambda / 8.0;
    for (int i = 0; i <= n; ++i) {
        const double t = i * h;
        g[static_cast<std::size_t>(i)] =
            amp * (std::exp(-k.v_plus * t) + std::exp(-k.v_minus * t));
    }
    const Complex* gd = g.data();
    return volterra_solve(grid, p.gamma0, [gd](int i) {
        return [gd, i](int j) { return gd[i - j]; };
    });
}

}  // namespace decolab
