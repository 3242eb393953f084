#pragma once

#include <cmath>
#include <complex>

#include "stc/series.hpp"

namespace stc {

/// Orientation of the ratio under the 1/mu power: forward is zf'/g
/// (theorems with the plain combination), reciprocal is g/(zf') (the
/// sign-flipped combination).
enum class Direction { Forward, Reciprocal };

/// A pair (f, g) of normalized functions with the effective class index
/// n = min(n1, n2).
struct FunctionPair {
    FunctionPair(NormalizedFunction f_in, NormalizedFunction g_in)
        : f(std::move(f_in)), g(std::move(g_in)), n(std::min(f.n_index(), g.n_index())) {}

    NormalizedFunction f;
    NormalizedFunction g;
    int n;
};

/// zf'/g - 1 (forward) or g/(zf') - 1 (reciprocal); the raw ratio before
/// the 1/mu power. Vanishes at the origin to order >= n.
inline AnalyticSeries ratio_minus_one(const FunctionPair& p, Direction d) {
    const AnalyticSeries zfp = shift_up(derivative(p.f.series()), 1);
    const AnalyticSeries& g = p.g.series();
    const AnalyticSeries q = (d == Direction::Forward) ? div(zfp, g) : div(g, zfp);
    return add_const(q, -1.0);
}

/// w = (ratio)^{1/mu} - 1, the comparison function. The power is
/// taken at series level with the branch pinned to value 1 at the origin.
inline AnalyticSeries w_series(const FunctionPair& p, double mu, Direction d) {
    if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("w_series: mu must lie in (0,1]");
    const AnalyticSeries h = ratio_minus_one(p, d);
    return add_const(pow1p(h, 1.0 / mu), -1.0);
}

/// 1 + zf''/f' - zg'/g (forward) or its negation (reciprocal). Vanishes at
/// the origin.
inline AnalyticSeries logderiv_combo(const FunctionPair& p, Direction d) {
    const AnalyticSeries fp = derivative(p.f.series());
    const AnalyticSeries zfpp_fp = div(shift_up(derivative(fp), 1), fp);
    const AnalyticSeries zgp_g = div(shift_up(derivative(p.g.series()), 1), p.g.series());
    const AnalyticSeries combo = add_const(sub(zfpp_fp, zgp_g), 1.0);
    return (d == Direction::Forward) ? combo : scale(combo, -1.0);
}

/// logderiv_combo minus mu*z*w'/(w+1). Identically zero as a formal series;
/// the central correctness oracle of the whole artifact.
inline AnalyticSeries identity_residual(const FunctionPair& p, double mu, Direction d) {
    const AnalyticSeries w = w_series(p, mu, d);
    const AnalyticSeries t = div(shift_up(derivative(w), 1), add_const(w, 1.0));
    return sub(logderiv_combo(p, d), scale(t, mu));
}

/// Re(delta + mu*k*e^{i theta}/(e^{i theta}+1)). Equals Re(delta) + mu*k/2
/// for every theta != pi; the half-plane step of the proofs.
inline double halfplane_re(cplx delta, double mu, double k, double theta) {
    if (k < 0.0) throw SpecInvalid("halfplane_re: k must be >= 0");
    const double t = std::remainder(theta, 2.0 * M_PI);
    if (std::abs(std::abs(t) - M_PI) < 1e-9)
        throw SingularPoint("halfplane_re: theta = pi (w(z0) = -1)");
    const cplx u = std::polar(1.0, theta);
    return (delta + mu * k * u / (u + 1.0)).real();
}

/// |delta + mu*k*rho*e^{i theta}/(rho*e^{i theta}+1)| via the closed-form
/// modulus expansion used in the boundary argument.
inline double boundary_modulus(double delta, double mu, double k, double rho, double theta) {
    if (!(delta > 0.0)) throw SpecInvalid("boundary_modulus: delta must be > 0");
    if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("boundary_modulus: mu must lie in (0,1]");
    if (k < 0.0) throw SpecInvalid("boundary_modulus: k must be >= 0");
    if (!(rho > 0.0)) throw SpecInvalid("boundary_modulus: rho must be > 0");
    const double denom = rho * rho + 1.0 + 2.0 * rho * std::cos(theta);
    if (denom <= 1e-12) throw SingularPoint("boundary_modulus: rho*e^{i theta} = -1");
    const double expr =
        delta * delta + mu * delta * k +
        (mu * delta * k * (rho * rho - 1.0) + mu * mu * rho * rho * k * k) / denom;
    return std::sqrt(std::max(expr, 0.0));
}

}  // namespace stc
