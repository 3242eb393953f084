#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "stc/errors.hpp"

namespace stc {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 128;
/// Relative threshold below which a coefficient counts as zero when
/// computing vanishing orders. Synthesized series carry rounding dust.
inline constexpr double kZeroCoeffTol = 1e-13;
/// Largest radius any grid is allowed to touch; truncated series are
/// meaningless on the boundary itself.
inline constexpr double kRMax = 0.995;
/// An evaluation whose tail bound exceeds this is flagged unreliable.
inline constexpr double kReliabilityTol = 1e-7;

namespace detail {

inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline int compute_vanish(const std::vector<cplx>& c) {
    double mx = 0.0;
    for (const cplx& v : c) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return static_cast<int>(c.size());  // N+1 sentinel
    const double tol = kZeroCoeffTol * mx;
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        if (std::abs(c[k]) > tol) return k;
    return static_cast<int>(c.size());
}

}  // namespace detail

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N together with
/// its numerically determined vanishing order. Immutable after construction.
class AnalyticSeries {
  public:
    explicit AnalyticSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw SpecInvalid("AnalyticSeries: empty coefficient list");
        for (const cplx& v : coeffs_)
            if (!detail::finite(v)) throw NonFiniteCoefficient("AnalyticSeries: NaN/Inf coefficient");
        vanish_ = detail::compute_vanish(coeffs_);
    }

    static AnalyticSeries zero(int order) {
        return AnalyticSeries(std::vector<cplx>(static_cast<std::size_t>(order) + 1, cplx{}));
    }

    static AnalyticSeries constant(cplx c, int order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, cplx{});
        v[0] = c;
        return AnalyticSeries(std::move(v));
    }

    static AnalyticSeries monomial(cplx c, int degree, int order) {
        if (degree > order) throw SpecInvalid("monomial: degree exceeds order");
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, cplx{});
        v[static_cast<std::size_t>(degree)] = c;
        return AnalyticSeries(std::move(v));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int vanish() const { return vanish_; }
    bool is_zero() const { return vanish_ > order(); }

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : cplx{};
    }

  private:
    std::vector<cplx> coeffs_;
    int vanish_;
};

/// Pointwise evaluation result; tail_bound estimates the truncation error.
struct EvalResult {
    cplx value;
    double tail_bound;
};

inline AnalyticSeries from_coeffs(std::vector<cplx> coeffs) { return AnalyticSeries(std::move(coeffs)); }

inline int vanishing_order(const AnalyticSeries& a) { return a.vanish(); }

inline AnalyticSeries add(const AnalyticSeries& a, const AnalyticSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return AnalyticSeries(std::move(c));
}

inline AnalyticSeries sub(const AnalyticSeries& a, const AnalyticSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return AnalyticSeries(std::move(c));
}

inline AnalyticSeries scale(const AnalyticSeries& a, cplx s) {
    std::vector<cplx> c = a.coeffs();
    for (cplx& v : c) v *= s;
    return AnalyticSeries(std::move(c));
}

inline AnalyticSeries add_const(const AnalyticSeries& a, cplx s) {
    std::vector<cplx> c = a.coeffs();
    c[0] += s;
    return AnalyticSeries(std::move(c));
}

/// Multiply by z^k (order grows by k).
inline AnalyticSeries shift_up(const AnalyticSeries& a, int k) {
    std::vector<cplx> c(a.coeffs().size() + static_cast<std::size_t>(k), cplx{});
    for (int j = 0; j <= a.order(); ++j) c[static_cast<std::size_t>(j + k)] = a.coeff(j);
    return AnalyticSeries(std::move(c));
}

/// Divide by z^k, dropping the first k coefficients (order shrinks by k).
inline AnalyticSeries shift_down(const AnalyticSeries& a, int k) {
    if (a.order() < k) throw DivisionOrderError("shift_down: order too small");
    std::vector<cplx> c(a.coeffs().begin() + k, a.coeffs().end());
    return AnalyticSeries(std::move(c));
}

/// Cauchy product truncated at the shorter operand's order.
inline AnalyticSeries mul(const AnalyticSeries& a, const AnalyticSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
    for (int i = 0; i <= n; ++i) {
        const cplx ai = a.coeff(i);
        if (ai == cplx{}) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += ai * b.coeff(j);
    }
    return AnalyticSeries(std::move(c));
}

/// Quotient a/b. Vanishing orders are aligned first; the quotient is
/// analytic only when vanish(b) <= vanish(a).
inline AnalyticSeries div(const AnalyticSeries& a, const AnalyticSeries& b) {
    if (b.is_zero()) throw DivisionOrderError("div: denominator is identically zero");
    const int vb = b.vanish();
    if (vb > a.vanish()) throw DivisionOrderError("div: denominator vanishes to higher order than numerator");
    if (a.order() < vb || b.order() < vb) throw DivisionOrderError("div: truncation too short for alignment");
    const AnalyticSeries aa = shift_down(a, vb);
    const AnalyticSeries bb = shift_down(b, vb);
    const int n = std::min(aa.order(), bb.order());
    const cplx b0 = bb.coeff(0);
    std::vector<cplx> q(static_cast<std::size_t>(n) + 1, cplx{});
    for (int k = 0; k <= n; ++k) {
        cplx s = aa.coeff(k);
        for (int j = 1; j <= k; ++j) s -= bb.coeff(j) * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = s / b0;
    }
    return AnalyticSeries(std::move(q));
}

inline AnalyticSeries derivative(const AnalyticSeries& a) {
    if (a.order() == 0) return AnalyticSeries::zero(0);
    std::vector<cplx> c(static_cast<std::size_t>(a.order()), cplx{});
    for (int k = 1; k <= a.order(); ++k) c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * a.coeff(k);
    return AnalyticSeries(std::move(c));
}

/// Term-wise antiderivative normalized to value 0 at the origin.
inline AnalyticSeries antiderivative0(const AnalyticSeries& a) {
    std::vector<cplx> c(a.coeffs().size() + 1, cplx{});
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k + 1)] = a.coeff(k) / static_cast<double>(k + 1);
    return AnalyticSeries(std::move(c));
}

/// log(1+h) for h with h(0)=0, by the standard coefficient recurrence.
inline AnalyticSeries log1p_series(const AnalyticSeries& h) {
    if (h.vanish() < 1) throw BranchPrecondition("log1p_series: h(0) != 0");
    const int n = h.order();
    std::vector<cplx> l(static_cast<std::size_t>(n) + 1, cplx{});
    for (int k = 1; k <= n; ++k) {
        cplx s = h.coeff(k);
        cplx acc{};
        for (int j = 1; j < k; ++j) acc += static_cast<double>(j) * l[static_cast<std::size_t>(j)] * h.coeff(k - j);
        l[static_cast<std::size_t>(k)] = s - acc / static_cast<double>(k);
    }
    return AnalyticSeries(std::move(l));
}

/// exp(s) for s with s(0)=0.
inline AnalyticSeries exp_series(const AnalyticSeries& s) {
    if (s.vanish() < 1) throw BranchPrecondition("exp_series: s(0) != 0");
    const int n = s.order();
    std::vector<cplx> e(static_cast<std::size_t>(n) + 1, cplx{});
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * s.coeff(j) * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    return AnalyticSeries(std::move(e));
}

/// (1+h)^e as the analytic branch with value 1 at the origin. The branch is
/// fixed at the series level, so no pointwise branch tracking is ever needed.
inline AnalyticSeries pow1p(const AnalyticSeries& h, double e) {
    if (h.vanish() < 1) throw BranchPrecondition("pow1p: h(0) != 0");
    return exp_series(scale(log1p_series(h), e));
}

/// Horner evaluation inside the disk with a geometric tail estimate fitted
/// to the last 8 coefficient magnitudes.
inline EvalResult eval(const AnalyticSeries& a, cplx z) {
    const double az = std::abs(z);
    if (az >= 1.0) throw OutsideDisk("eval: |z| >= 1");
    cplx v{};
    for (int k = a.order(); k >= 0; --k) v = v * z + a.coeff(k);

    const int n = a.order();
    const double cn = std::abs(a.coeff(n));
    double scale = 0.0;
    for (const cplx& c : a.coeffs()) scale = std::max(scale, std::abs(c));
    double tail = 0.0;
    // A trailing coefficient at rounding-dust level (relative to the series
    // scale) means the series terminated; fitting a decay ratio to dust
    // would report garbage, so the tail is zero there.
    if (cn > kZeroCoeffTol * scale && az > 0.0) {
        const int lo = std::max(0, n - 7);
        int j0 = -1;
        for (int j = lo; j < n; ++j) {
            if (std::abs(a.coeff(j)) > kZeroCoeffTol * scale) { j0 = j; break; }
        }
        double q;
        if (j0 < 0) {
            q = 1.0;  // no history in the window; assume no decay
        } else {
            q = std::pow(cn / std::abs(a.coeff(j0)), 1.0 / static_cast<double>(n - j0));
        }
        if (!(q >= 0.0)) q = 1.0;
        const double qz = q * az;
        if (qz >= 1.0) {
            tail = std::numeric_limits<double>::infinity();
        } else {
            tail = cn * std::pow(az, n) * qz / (1.0 - qz);
        }
    }
    return EvalResult{v, tail};
}

/// A series certified to be of the normalized form z + a_{n+1} z^{n+1} + ...
/// n_index is the class index (gap length after the leading z).
class NormalizedFunction {
  public:
    NormalizedFunction(AnalyticSeries series, int n_index)
        : series_(std::move(series)), n_index_(n_index) {
        validate();
    }

    /// Builds with the class index inferred from the first nonzero
    /// coefficient after z.
    static NormalizedFunction infer(AnalyticSeries series) {
        double mx = 0.0;
        for (const cplx& v : series.coeffs()) mx = std::max(mx, std::abs(v));
        const double tol = std::max(kZeroCoeffTol * mx, 1e-300);
        int idx = series.order();
        for (int k = 2; k <= series.order(); ++k) {
            if (std::abs(series.coeff(k)) > tol) { idx = k - 1; break; }
        }
        return NormalizedFunction(std::move(series), idx);
    }

    const AnalyticSeries& series() const { return series_; }
    int n_index() const { return n_index_; }

  private:
    void validate() const {
        if (series_.order() < 1) throw SpecInvalid("NormalizedFunction: order must be >= 1");
        if (n_index_ < 1) throw SpecInvalid("NormalizedFunction: class index must be >= 1");
        if (std::abs(series_.coeff(0)) > 1e-12) throw SpecInvalid("NormalizedFunction: f(0) != 0");
        if (std::abs(series_.coeff(1) - 1.0) > 1e-9) throw SpecInvalid("NormalizedFunction: f'(0) != 1");
        for (int k = 2; k <= std::min(n_index_, series_.order()); ++k)
            if (std::abs(series_.coeff(k)) > 1e-9)
                throw SpecInvalid("NormalizedFunction: coefficient gap violated for declared index");
    }

    AnalyticSeries series_;
    int n_index_;
};

/// The identity function z at the given truncation order.
inline NormalizedFunction identity_function(int order = kDefaultOrder) {
    return NormalizedFunction(AnalyticSeries::monomial(1.0, 1, order), order);
}

}  // namespace stc
