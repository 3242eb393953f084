#pragma once

#include <cmath>
#include <vector>

#include "stc/series.hpp"

namespace stc {

/// Result of one circle scan: the argmax point, the max modulus, and
/// whether |w| was numerically constant on the circle (monomial-like).
struct CircleMax {
    cplx z0;
    double wmax;
    bool flat;
};

namespace detail {

inline double abs2_on_circle(const AnalyticSeries& w, double r, double theta) {
    const cplx v = eval(w, std::polar(r, theta)).value;
    return std::norm(v);
}

/// Golden-section maximization of |w(r e^{i theta})|^2 on [lo, hi].
inline double golden_max(const AnalyticSeries& w, double r, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = abs2_on_circle(w, r, x1);
    double f2 = abs2_on_circle(w, r, x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = abs2_on_circle(w, r, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = abs2_on_circle(w, r, x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

/// Locates the maximum of |w| on the circle |z| = r: coarse m-point scan
/// followed by golden-section refinement of the angle.
inline CircleMax max_on_circle(const AnalyticSeries& w, double r, int m = 512) {
    if (!(r > 0.0 && r <= kRMax)) throw SpecInvalid("max_on_circle: r must lie in (0, r_max]");
    if (m < 16) throw SpecInvalid("max_on_circle: need at least 16 angular samples");
    std::vector<double> samples(static_cast<std::size_t>(m));
    double best = -1.0, worst = std::numeric_limits<double>::infinity();
    int best_idx = 0;
    for (int j = 0; j < m; ++j) {
        const double s = detail::abs2_on_circle(w, r, 2.0 * M_PI * j / m);
        samples[static_cast<std::size_t>(j)] = s;
        if (s > best) { best = s; best_idx = j; }
        worst = std::min(worst, s);
    }
    if (best < 1e-30) throw DegenerateMax("max_on_circle: w is identically zero on the circle");
    if (best - worst < 1e-12 * best) {
        // |w| constant on the circle: every point is a maximum.
        const cplx z0 = std::polar(r, 0.0);
        return CircleMax{z0, std::abs(eval(w, z0).value), true};
    }
    const double step = 2.0 * M_PI / m;
    const double center = step * best_idx;
    const double theta = detail::golden_max(w, r, center - step, center + step);
    const cplx z0 = std::polar(r, theta);
    return CircleMax{z0, std::abs(eval(w, z0).value), false};
}

/// z0 * w'(z0) / w(z0); real and >= the vanishing order at genuine maxima.
inline cplx jack_quotient(const AnalyticSeries& w, cplx z0) {
    const cplx wv = eval(w, z0).value;
    if (std::abs(wv) < 1e-13) throw ZeroDenominator("jack_quotient: |w(z0)| below tolerance");
    const cplx wd = eval(derivative(w), z0).value;
    return z0 * wd / wv;
}

/// One circle-wise verification record for the lemma.
struct JackReport {
    double r = 0.0;
    cplx z0{};
    double wmax = 0.0;
    cplx quotient{};
    double k_est = 0.0;
    double imag_residual = 0.0;
    bool order_ok = false;
    bool flat = false;
    bool degenerate = false;
};

/// Runs the probe on each radius. Degenerate circles (w vanishing there)
/// are reported with the degenerate flag instead of failing the batch.
inline std::vector<JackReport> jack_verify(const AnalyticSeries& w, const std::vector<double>& radii,
                                           double tol = 1e-6, int m = 512) {
    const int v = vanishing_order(w);
    std::vector<JackReport> out;
    out.reserve(radii.size());
    for (double r : radii) {
        JackReport rep;
        rep.r = r;
        try {
            const CircleMax cm = max_on_circle(w, r, m);
            rep.z0 = cm.z0;
            rep.wmax = cm.wmax;
            rep.flat = cm.flat;
            rep.quotient = jack_quotient(w, cm.z0);
            rep.k_est = rep.quotient.real();
            rep.imag_residual = std::abs(rep.quotient.imag());
            rep.order_ok = rep.k_est >= static_cast<double>(v) - tol;
        } catch (const DegenerateMax&) {
            rep.degenerate = true;
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace stc
