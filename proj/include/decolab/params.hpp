// params.hpp — Physical and dimensionless model parameters.
//
// Two non-interacting atoms move with velocity v inside identical leaky
// cavities. Each atom couples to a Lorentzian structured reservoir of width
// lambda centered at omega0 - delta; gamma0 sets the relaxation scale. All
// downstream dynamics depend only on the dimensionless ratios held by
// ReducedParams, so PhysicalParams is the public-facing type and reduce()
// is the single conversion point.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace decolab {

using Complex = std::complex<double>;

// The model assumes beta << 1; every regime of interest stays below 0.3.
inline constexpr double kBetaMax = 0.3;

struct PhysicalParams {
    double gamma0{1.0};   // atomic decay rate                 [1/time]
    double lambda{1.0};   // spectral width of the coupling    [1/time]
    double omega0{0.0};   // atomic transition frequency       [1/time]
    double delta{0.0};    // cavity-atom detuning              [1/time]
    double beta{0.0};     // velocity ratio v/c                [dimensionless]
    double tau{std::numeric_limits<double>::infinity()};  // mirror delay l/c [time]

    bool continuum() const { return std::isinf(tau); }
    double reservoir_correlation_time() const { return 1.0 / lambda; }
    double relaxation_time() const { return 1.0 / gamma0; }

    void validate() const {
        if (!(gamma0 > 0.0)) throw std::invalid_argument("invalid-params: gamma0 must be > 0");
        if (!(lambda > 0.0)) throw std::invalid_argument("invalid-params: lambda must be > 0");
        if (!(omega0 >= 0.0)) throw std::invalid_argument("invalid-params: omega0 must be >= 0");
        if (!std::isfinite(delta)) throw std::invalid_argument("invalid-params: delta must be finite");
        if (!(beta >= 0.0)) throw std::invalid_argument("invalid-params: beta must be >= 0");
        if (!(beta < kBetaMax))
            throw std::invalid_argument("invalid-params: beta must be < " + std::to_string(kBetaMax));
        if (!(tau > 0.0)) throw std::invalid_argument("invalid-params: tau must be > 0 (or infinite)");
    }
};

// Weak coupling lambda > gamma0 decays without memory; strong coupling
// lambda < gamma0 shows oscillatory memory effects. lambda == gamma0 sits on
// the boundary where the stationary decay rates coalesce.
enum class Regime { Markovian, NonMarkovian, Degenerate };

struct ReducedParams {
    double x1{1.0};    // lambda / gamma0
    double x2{0.0};    // omega0 / gamma0
    double x3{0.0};    // delta  / gamma0
    double beta{0.0};  // carried through unchanged

    Regime regime() const {
        if (x1 > 1.0) return Regime::Markovian;
        if (x1 < 1.0) return Regime::NonMarkovian;
        return Regime::Degenerate;
    }

    void validate() const {
        if (!(x1 > 0.0)) throw std::invalid_argument("invalid-params: x1 must be > 0");
        if (!(x2 >= 0.0)) throw std::invalid_argument("invalid-params: x2 must be >= 0");
        if (!std::isfinite(x3)) throw std::invalid_argument("invalid-params: x3 must be finite");
        if (!(beta >= 0.0 && beta < kBetaMax))
            throw std::invalid_argument("invalid-params: beta must be in [0, " +
                                        std::to_string(kBetaMax) + ")");
    }
};

inline ReducedParams reduce(const PhysicalParams& p) {
    p.validate();
    return ReducedParams{p.lambda / p.gamma0, p.omega0 / p.gamma0, p.delta / p.gamma0, p.beta};
}

// Split decay exponents of the memory kernel in units of gamma0:
//   u± = (1 ± beta) x1 ± i beta x2 − i (1 ± beta) x3.
// At beta = 0 both collapse to u = x1 − i x3.
inline std::pair<Complex, Complex> u_pm(const ReducedParams& r) {
    r.validate();
    const Complex u(r.x1, -r.x3);
    const Complex w(r.x1, r.x2 - r.x3);  // u + i x2
    return {u + r.beta * w, u - r.beta * w};
}

// Initial two-qubit amplitudes: a|00> + b|11> with a real positive and
// b = |b| e^{i delta_phase}. Only |b| enters the concurrence; the phase is
// stored for completeness.
struct InitialState {
    double a{0.0};
    double b_mag{0.0};
    double delta_phase{0.0};  // radians

    InitialState(double a_, double b_mag_, double delta_phase_ = 0.0)
        : a(a_), b_mag(b_mag_), delta_phase(delta_phase_) {
        validate();
    }

    static InitialState from_amplitude(double a_, double delta_phase_ = 0.0) {
        if (!(a_ > 0.0 && a_ < 1.0))
            throw std::invalid_argument("invalid-params: a must be in (0, 1)");
        return InitialState(a_, std::sqrt(1.0 - a_ * a_), delta_phase_);
    }

    void validate() const {
        if (!(a > 0.0 && a < 1.0))
            throw std::invalid_argument("invalid-params: a must be in (0, 1)");
        if (!(b_mag >= 0.0)) throw std::invalid_argument("invalid-params: |b| must be >= 0");
        if (std::abs(a * a + b_mag * b_mag - 1.0) > 1e-12)
            throw std::invalid_argument("invalid-params: a^2 + |b|^2 must equal 1");
        if (!std::isfinite(delta_phase))
            throw std::invalid_argument("invalid-params: delta_phase must be finite");
    }
};

}  // namespace decolab
