#include "decolab/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decolab/errors.hpp"

namespace decolab {

namespace {

constexpr int kPolishSteps = 3;
constexpr double kDegenerateRel = 1e-8;

Complex eval_derivative(const CubicCoefficients& c, Complex q) {
    return (3.0 * q + 2.0 * c.c2) * q + c.c1;
}

void polish(const CubicCoefficients& c, std::array<Complex, 3>& roots) {
    for (auto& q : roots) {
        for (int it = 0; it < kPolishSteps; ++it) {
            const Complex f = eval_cubic(c, q);
            const Complex df = eval_derivative(c, q);
            if (std::abs(df) < 1e-300) break;  // multiple root; Newton stalls
            q -= f / df;
        }
    }
}

void sort_roots(std::array<Complex, 3>& roots) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

CubicRoots certify(const CubicCoefficients& c, std::array<Complex, 3> roots) {
    polish(c, roots);
    sort_roots(roots);
    CubicRoots out;
    out.q = roots;
    for (const auto& q : roots) out.residual = std::max(out.residual, std::abs(eval_cubic(c, q)));
    double max_mag = 0.0;
    for (const auto& q : roots) max_mag = std::max(max_mag, std::abs(q));
    double min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) min_dist = std::min(min_dist, std::abs(roots[i] - roots[j]));
    out.degenerate = min_dist <= kDegenerateRel * std::max(max_mag, 1e-300) || max_mag == 0.0;
    return out;
}

}  // namespace

double coefficient_scale(const CubicCoefficients& c) {
    return std::max({1.0, std::abs(c.c0), std::abs(c.c1), std::abs(c.c2)});
}

Complex eval_cubic(const CubicCoefficients& c, Complex q) {
    return ((q + c.c2) * q + c.c1) * q + c.c0;
}

CubicCoefficients cubic_coefficients(const ReducedParams& r) {
    r.validate();
    const auto [up, um] = u_pm(r);
    const Complex u(r.x1, -r.x3);
    return CubicCoefficients{2.0 * u, up * um + r.x1 / 4.0, r.x1 * u / 4.0};
}

CubicRoots solve_cubic(const CubicCoefficients& c) {
    if (!std::isfinite(std::abs(c.c0)) || !std::isfinite(std::abs(c.c1)) ||
        !std::isfinite(std::abs(c.c2)))
        throw std::invalid_argument("invalid-params: cubic coefficients must be finite");

    // Depressed form w^3 + p w + r with q = w - c2/3.
    const Complex shift = c.c2 / 3.0;
    const Complex p = c.c1 - c.c2 * c.c2 / 3.0;
    const Complex r = c.c0 - c.c1 * c.c2 / 3.0 + 2.0 * c.c2 * c.c2 * c.c2 / 27.0;

    const double scale = coefficient_scale(c);
    std::array<Complex, 3> roots;
    if (std::abs(p) < 1e-14 * scale && std::abs(r) < 1e-14 * scale * scale * scale) {
        roots.fill(-shift);  // triple root
        return certify(c, roots);
    }

    const Complex d = std::sqrt(r * r / 4.0 + p * p * p / 27.0);
    // Pick the sign that avoids cancellation in -r/2 +/- d.
    Complex u3 = -r / 2.0 + d;
    if (std::abs(-r / 2.0 - d) > std::abs(u3)) u3 = -r / 2.0 - d;

    const Complex u1 = std::pow(u3, 1.0 / 3.0);
    constexpr double kHalfSqrt3 = 0.8660254037844386467637232;
    const Complex zeta(-0.5, kHalfSqrt3);
    Complex uk = u1;
    for (int k = 0; k < 3; ++k) {
        const Complex wk = uk - p / (3.0 * uk);
        roots[static_cast<std::size_t>(k)] = wk - shift;
        uk *= zeta;
    }
    return certify(c, roots);
}

CubicRoots roots_slow(const ReducedParams& r) {
    r.validate();
    const Complex u(r.x1, -r.x3);
    const Complex disc = u * u - r.x1;
    if (std::abs(disc) < 1e-10)
        throw NumericError("degenerate-expansion: |u^2 - x1| < 1e-10 in perturbative roots");
    const Complex s = std::sqrt(disc);
    const Complex w(r.x1, r.x2 - r.x3);  // u + i x2
    const Complex w2 = w * w;
    const double b2 = r.beta * r.beta;

    const Complex dq1 = -4.0 * u * w2 / r.x1;
    const Complex dq2 = -w2 * (u - s) * (u - s) / (r.x1 * s);
    const Complex dq3 = w2 * (u + s) * (u + s) / (r.x1 * s);

    std::array<Complex, 3> roots{
        -u + dq1 * b2,
        -0.5 * (u - s) + dq2 * b2,
        -0.5 * (u + s) + dq3 * b2,
    };
    sort_roots(roots);

    const CubicCoefficients c = cubic_coefficients(r);
    CubicRoots out;
    out.q = roots;
    for (const auto& q : roots) out.residual = std::max(out.residual, std::abs(eval_cubic(c, q)));
    double max_mag = 0.0;
    for (const auto& q : roots) max_mag = std::max(max_mag, std::abs(q));
    double min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) min_dist = std::min(min_dist, std::abs(roots[i] - roots[j]));
    out.degenerate = min_dist <= kDegenerateRel * std::max(max_mag, 1e-300);
    return out;
}

}  // namespace decolab
