// oracle.hpp — Independent numerical solvers for the memory-kernel dynamics.
//
// Two routes that share no code with the residue inversion:
//  * p_ode_oracle: the continuum kernel is a sum of two exponentials, so the
//    integro-differential equation reduces exactly to a linear ODE system
//    P' = -(y+ + y-), y±' = -v± y± + (gamma0 lambda / 8) P, integrated by
//    fixed-step RK4 with a Richardson step-size check.
//  * p_volterra_oracle: kernel-agnostic trapezoidal product quadrature with
//    predictor-corrector stepping, O(N^2) work. This is the only route to
//    finite-tau dynamics.

#pragma once

#include <functional>

#include "decolab/propagator.hpp"

namespace decolab {

struct OdeOptions {
    double step{1e-3};            // scaled-time step x = gamma0 t
    bool richardson_check{true};  // compare against a half-step run
    double richardson_tol{1e-8};
};

PropagatorSeries p_ode_oracle(const TimeGrid& grid, const PhysicalParams& p,
                              const OdeOptions& opts = {});

// Kernel callback in physical time, f(t, s) for 0 <= s <= t.
using KernelFn = std::function<Complex(double, double)>;

// Solves dP/dt = -int_0^t f(t, s) P(s) ds on the grid nodes (the grid is the
// quadrature mesh; spec default is 10^4 intervals). Requires x_start = 0.
PropagatorSeries p_volterra_oracle(const TimeGrid& grid, const PhysicalParams& p,
                                   const KernelFn& kernel);

// Same quadrature specialized to the continuum difference kernel: g(t - s)
// is tabulated once per run, keeping the O(N^2) sweep multiply-add bound.
PropagatorSeries p_volterra_continuum(const TimeGrid& grid, const PhysicalParams& p);

}  // namespace decolab
