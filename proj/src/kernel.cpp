#include "decolab/kernel.hpp"

#include <cmath>
#include <numbers>

#include "decolab/errors.hpp"

namespace decolab {

namespace {

const Complex kI(0.0, 1.0);

void require_nonnegative_times(double t, double s) {
    if (!(t >= 0.0) || !(s >= 0.0))
        throw std::invalid_argument("invalid-params: kernel times must be >= 0");
}

}  // namespace

KernelParams::KernelParams(const PhysicalParams& p) : physical(p) {
    p.validate();
    lambda_bar = Complex(p.lambda, -p.delta);
    alpha = p.beta * (lambda_bar + kI * p.omega0);
    v_plus = lambda_bar + alpha;
    v_minus = lambda_bar - alpha;
    // Decay of the kernel: both real parts are (1 ± beta) lambda.
    if (!(v_plus.real() > 0.0) || !(v_minus.real() > 0.0))
        throw std::invalid_argument("invalid-params: Re(v±) must be positive");
}

double spectral_density(double omega, const PhysicalParams& p) {
    p.validate();
    const double d = p.omega0 - omega - p.delta;
    return p.gamma0 * p.lambda * p.lambda / (2.0 * std::numbers::pi * (d * d + p.lambda * p.lambda));
}

Complex kernel_finite_tau(double t, double s, const PhysicalParams& p) {
    require_nonnegative_times(t, s);
    if (p.continuum())
        throw std::invalid_argument("invalid-params: finite-tau kernel requires finite tau");
    const KernelParams k(p);
    const double lam = p.lambda, b = p.beta, w0 = p.omega0, d = p.delta, tau = p.tau;
    const double ts = t - s;

    const Complex direct1 =
        std::exp(kI * ((b * w0 + (1.0 - b) * d) * ts) - lam * (1.0 - b) * std::abs(ts));
    const Complex direct2 =
        std::exp(kI * ((-b * w0 + (1.0 + b) * d) * ts) - lam * (1.0 + b) * std::abs(ts));
    const double phase_m = (w0 - d) * (b * (t + s) - 2.0 * tau);
    const Complex mirror1 = std::exp(kI * (phase_m + d * ts) -
                                     lam * std::abs((1.0 - b) * t - (1.0 + b) * s + 2.0 * tau));
    const Complex mirror2 = std::exp(kI * (-phase_m + d * ts) -
                                     lam * std::abs((1.0 + b) * t - (1.0 - b) * s - 2.0 * tau));
    return p.gamma0 * lam / 8.0 * (direct1 + direct2 - mirror1 - mirror2);
}

Complex kernel_continuum(double t, double s, const PhysicalParams& p) {
    require_nonnegative_times(t, s);
    p.validate();
    const double lam = p.lambda, b = p.beta, w0 = p.omega0, d = p.delta;
    const double ts = t - s;
    const Complex direct1 =
        std::exp(kI * ((b * w0 + (1.0 - b) * d) * ts) - lam * (1.0 - b) * std::abs(ts));
    const Complex direct2 =
        std::exp(kI * ((-b * w0 + (1.0 + b) * d) * ts) - lam * (1.0 + b) * std::abs(ts));
    return p.gamma0 * lam / 8.0 * (direct1 + direct2);
}

Complex g_of_t(double t, const PhysicalParams& p) {
    if (!(t >= 0.0)) throw std::invalid_argument("invalid-params: g(t) requires t >= 0");
    const KernelParams k(p);
    // cosh(alpha t) e^{-lambda_bar t} written as two exponentials; both
    // exponents have non-positive real part, so this cannot overflow.
    return p.gamma0 * p.lambda / 8.0 * (std::exp(-k.v_plus * t) + std::exp(-k.v_minus * t));
}

Complex g_hat(Complex pvar, const PhysicalParams& p) {
    const KernelParams k(p);
    const Complex dp = pvar + k.v_plus;
    const Complex dm = pvar + k.v_minus;
    if (std::abs(dp) < 1e-12 * p.lambda || std::abs(dm) < 1e-12 * p.lambda)
        throw NumericError("pole-proximity: p is within 1e-12*lambda of a kernel pole");
    return p.gamma0 * p.lambda / 8.0 * (1.0 / dp + 1.0 / dm);
}

}  // namespace decolab
