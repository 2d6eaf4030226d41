// kernel.hpp — Reservoir correlation function of the moving-atom model.
//
// The Lorentzian spectral density J(omega) produces a memory kernel f(t, s).
// With mirrors at finite delay tau the kernel has four exponential terms
// (two of them boundary reflections); in the continuum limit tau -> inf only
// the two direct terms survive and f depends on t - s alone, with
// g(t) = (gamma0 lambda / 4) cosh(alpha t) e^{-lambda_bar t}.

#pragma once

#include "decolab/params.hpp"

namespace decolab {

// Derived complex rates. Re(v±) = (1 ± beta) lambda > 0 guarantees decay.
struct KernelParams {
    PhysicalParams physical;
    Complex lambda_bar;  // lambda - i delta
    Complex alpha;       // beta (lambda_bar + i omega0)
    Complex v_plus;      // lambda_bar + alpha
    Complex v_minus;     // lambda_bar - alpha

    explicit KernelParams(const PhysicalParams& p);
};

// J(omega) = (1/2pi) gamma0 lambda^2 / ((omega0 - omega - delta)^2 + lambda^2).
double spectral_density(double omega, const PhysicalParams& p);

// Four-term kernel at finite mirror delay; requires t, s >= 0 and finite tau.
Complex kernel_finite_tau(double t, double s, const PhysicalParams& p);

// Two-term continuum kernel; equals g(t - s) for t > s.
Complex kernel_continuum(double t, double s, const PhysicalParams& p);

// g(t) = (gamma0 lambda / 4) cosh(alpha t) e^{-lambda_bar t}, t >= 0.
Complex g_of_t(double t, const PhysicalParams& p);

// Laplace transform: g_hat(p) = (gamma0 lambda / 8) (1/(p + v+) + 1/(p + v-)).
// Throws NumericError("pole-proximity") within 1e-12 * lambda of a pole.
Complex g_hat(Complex pvar, const PhysicalParams& p);

}  // namespace decolab
