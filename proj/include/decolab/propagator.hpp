// propagator.hpp — Analytic single-atom amplitude P(t) by residue inversion.
//
// P(x) is the inverse Laplace transform of a rational function with three
// poles: a sum of three complex exponentials weighted by residues. Closed
// forms cover the stationary (beta = 0) case and a perturbative small-beta
// variant. Time is always the scaled x = gamma0 t.

#pragma once

#include <vector>

#include "decolab/cubic.hpp"
#include "decolab/params.hpp"

namespace decolab {

struct TimeGrid {
    double x_start{0.0};
    double x_end{30.0};
    int n_points{3001};

    void validate() const {
        if (!(x_start >= 0.0) || !(x_end > x_start))
            throw std::invalid_argument("invalid-params: grid requires 0 <= x_start < x_end");
        if (n_points < 2) throw std::invalid_argument("invalid-params: grid needs >= 2 points");
    }
    double spacing() const { return (x_end - x_start) / (n_points - 1); }
    double point(int i) const { return x_start + spacing() * i; }

    static TimeGrid markovian() { return TimeGrid{0.0, 30.0, 3001}; }
    static TimeGrid non_markovian() { return TimeGrid{0.0, 100.0, 10001}; }
};

struct PropagatorSeries {
    TimeGrid grid;
    std::vector<Complex> values;
};

// Contractivity |P| <= 1 (+tol) and P(0) = 1 when the grid starts at zero.
// Violation signals a solver bug, not bad input.
void check_series(const PropagatorSeries& s, double tol);

// Laplace-space amplitude in reduced units,
//   P_hat(q) = (q + u+)(q + u-) / ((q - q1)(q - q2)(q - q3)),
// equivalently 1 / (q + g_hat_reduced(q)).
Complex p_hat(Complex pvar, const ReducedParams& r);

// Point evaluator for the residue sum over given roots. Switches to the
// confluent (derivative-residue) form when roots coalesce, where the plain
// sum would divide by vanishing root gaps.
class AmplitudeEvaluator {
 public:
    AmplitudeEvaluator(const CubicRoots& roots, const ReducedParams& r);
    explicit AmplitudeEvaluator(const ReducedParams& r);  // roots from solve_cubic

    Complex operator()(double x) const;

 private:
    enum class Form { Distinct, DoublePole, TriplePole };
    Form form_{Form::Distinct};
    std::array<Complex, 3> q_{};    // exponents
    std::array<Complex, 3> res_{};  // residues / confluent weights
};

// Residue sum over given roots on a grid; exposed so tests can permute roots.
PropagatorSeries residue_series(const TimeGrid& grid, const CubicRoots& roots,
                                const ReducedParams& r);

// Exact propagator from solve_cubic roots.
PropagatorSeries p_analytic(const TimeGrid& grid, const ReducedParams& r);

// Stationary closed form; rejects beta != 0. The coalescing-rate limit
// (lambda_bar^2 = gamma0 lambda) is handled through sinh(z)/z.
PropagatorSeries p_stationary(const TimeGrid& grid, const PhysicalParams& p);

// Residue sum over the perturbative roots; documented validity beta <= 0.05.
PropagatorSeries p_slow(const TimeGrid& grid, const ReducedParams& r);

}  // namespace decolab
