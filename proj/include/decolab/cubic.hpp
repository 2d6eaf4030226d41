// cubic.hpp — Characteristic cubic of the amplitude dynamics.
//
// In Laplace space the single-atom amplitude has three poles, the roots of
// a monic complex cubic whose coefficients depend only on ReducedParams.
// The exact solver (Cardano + Newton polish) certifies its residuals; the
// perturbative solver expands the roots to second order in beta.

#pragma once

#include <array>

#include "decolab/params.hpp"

namespace decolab {

// Monic cubic q^3 + c2 q^2 + c1 q + c0.
struct CubicCoefficients {
    Complex c2{0.0};
    Complex c1{0.0};
    Complex c0{0.0};
};

struct CubicRoots {
    std::array<Complex, 3> q{};
    double residual{0.0};    // max |poly(q_j)| over the three roots
    bool degenerate{false};  // min pairwise distance < 1e-8 * max |root|
};

// Relative scale used by the residual certificate.
double coefficient_scale(const CubicCoefficients& c);

Complex eval_cubic(const CubicCoefficients& c, Complex q);

// c2 = 2(x1 - i x3), c1 = u+ u- + x1/4, c0 = x1 (x1 - i x3) / 4.
CubicCoefficients cubic_coefficients(const ReducedParams& r);

// Cardano with branch selection for cancellation safety, then a fixed number
// of Newton polish steps. Roots are sorted by descending real part (ties by
// imaginary part); the residue sum downstream is permutation-invariant, so
// the ordering is only for deterministic output.
CubicRoots solve_cubic(const CubicCoefficients& c);

// Perturbative roots to O(beta^2), remainder O(beta^4). Documented validity
// beta <= 0.05. Throws NumericError("degenerate-expansion") when
// |u^2 - x1| < 1e-10 (the sqrt(u^2 - x1) denominators vanish).
CubicRoots roots_slow(const ReducedParams& r);

}  // namespace decolab
