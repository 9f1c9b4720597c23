#pragma once

#include <cmath>
#include <complex>

// Elementary vertical-slit maps of the closed upper half-plane and the
// square-root branch they are built on. These are the one-step exact
// solutions for a constant driving value, so everything else in the
// library (forward composition, singular solutions, trace, zipper) is a
// chain of calls into this header. Keep it allocation-free and inline.

namespace loewner {

using complex = std::complex<double>;

/// Square root with the branch chosen so Im(result) >= 0, built from the
/// half-angle identities instead of std::sqrt's principal branch. The
/// branch cut sits on the positive real axis; arguments exactly on the
/// cut take the nonnegative root. Symmetric in y: sqrt_uhp(conj z) is
/// exactly -conj(sqrt_uhp z), which the zipper's reflection invariant
/// relies on.
inline complex sqrt_uhp(complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (y == 0.0) {
        if (x >= 0.0) return {std::sqrt(x), 0.0};
        return {0.0, std::sqrt(-x)};
    }
    const double r = std::hypot(x, y);
    double u, v;
    if (x >= 0.0) {
        u = std::sqrt(0.5 * (r + x));
        v = std::abs(y) / (2.0 * u);
    } else {
        v = std::sqrt(0.5 * (r - x));
        u = std::abs(y) / (2.0 * v);
    }
    return {y > 0.0 ? u : -u, v};
}

/// One zipper step: removes the vertical slit of capacity increment
/// delta growing at lambda, w |-> lambda + sqrt((w - lambda)^2 + 4 delta).
/// The slit tip lambda + 2i sqrt(delta) lands on lambda. Real points keep
/// the sign of (w - lambda); the tie at w == lambda takes the right branch.
inline complex elementary_slit_map(complex w, double lambda, double delta) {
    const complex u = w - lambda;
    if (u.imag() == 0.0) {
        const double x = u.real();
        const double root = std::sqrt(x * x + 4.0 * delta);
        return {lambda + (x < 0.0 ? -root : root), 0.0};
    }
    return lambda + sqrt_uhp(u * u + 4.0 * delta);
}

/// Inverse step: opens a vertical slit of capacity increment delta at
/// lambda, w |-> lambda + sqrt((w - lambda)^2 - 4 delta). Maps lambda to
/// the slit tip lambda + 2i sqrt(delta); real points with
/// |w - lambda| < 2 sqrt(delta) land on the slit.
inline complex elementary_slit_map_inverse(complex w, double lambda, double delta) {
    const complex u = w - lambda;
    if (u.imag() == 0.0) {
        const double x = u.real();
        const double q = x * x - 4.0 * delta;
        if (q >= 0.0) {
            const double root = std::sqrt(q);
            return {lambda + (x < 0.0 ? -root : root), 0.0};
        }
        return {lambda, std::sqrt(-q)};
    }
    return lambda + sqrt_uhp(u * u - 4.0 * delta);
}

/// Real branch above the driving value, x > lambda.
inline double advance_above(double x, double lambda, double delta) {
    const double u = x - lambda;
    return lambda + std::sqrt(u * u + 4.0 * delta);
}

/// Real branch below the driving value, x < lambda.
inline double advance_below(double x, double lambda, double delta) {
    const double u = x - lambda;
    return lambda - std::sqrt(u * u + 4.0 * delta);
}

} // namespace loewner
