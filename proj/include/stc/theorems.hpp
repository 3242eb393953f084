#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "stc/functionals.hpp"
#include "stc/series.hpp"

namespace stc {

/// sqrt(delta/(delta+mu*n)), the lower admissibility bound on rho.
inline double rho_floor(double delta, double mu, int n) {
    if (!(delta > 0.0)) throw SpecInvalid("rho_floor: delta must be > 0");
    if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("rho_floor: mu must lie in (0,1]");
    if (n < 1) throw SpecInvalid("rho_floor: n must be >= 1");
    return std::sqrt(delta / (delta + mu * n));
}

/// Parameter tuple for one theorem check, with the per-theorem validity
/// rules baked into validate().
struct TheoremParams {
    int id = 1;        // theorem 1..5
    double mu = 1.0;   // (0,1]
    double beta = 0.0;
    double gamma = 0.0;
    cplx delta{};      // real > 0 required for theorems 3 and 5
    double rho = 0.0;  // theorems 3 and 5 only
    double alpha = 0.0;  // theorem 2 only
    int n = 1;         // min(n1, n2)

    void validate() const {
        if (id < 1 || id > 5) throw SpecInvalid("TheoremParams: id must be 1..5");
        if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("TheoremParams: mu must lie in (0,1]");
        if (beta < 0.0 || gamma < 0.0) throw SpecInvalid("TheoremParams: beta, gamma must be >= 0");
        if (!(beta + gamma > 0.0)) throw SpecInvalid("TheoremParams: beta + gamma must be > 0");
        if (n < 1) throw SpecInvalid("TheoremParams: n must be >= 1");
        switch (id) {
            case 1:
            case 4:
                if (!(delta.real() > -mu * n / 2.0))
                    throw SpecInvalid("TheoremParams: need Re(delta) > -mu*n/2");
                break;
            case 2:
                if (!(alpha >= 0.0 && alpha < 1.0))
                    throw SpecInvalid("TheoremParams: alpha must lie in [0,1)");
                if (!(delta.real() > -mu * n / 2.0 - alpha))
                    throw SpecInvalid("TheoremParams: need Re(delta) > -mu*n/2 - alpha");
                break;
            case 3:
            case 5:
                if (std::abs(delta.imag()) > 0.0)
                    throw SpecInvalid("TheoremParams: delta must be real for theorems 3 and 5");
                if (!(delta.real() > 0.0)) throw SpecInvalid("TheoremParams: need delta > 0");
                if (!(rho > rho_floor(delta.real(), mu, n)))
                    throw SpecInvalid("TheoremParams: need rho > sqrt(delta/(delta+mu*n))");
                break;
        }
    }
};

/// Sampling lattice: a set of circles and a uniform angle count per circle.
struct DiskGrid {
    std::vector<double> radii;
    int angles = 512;

    void validate() const {
        if (radii.empty()) throw GridEmpty("DiskGrid: no radii");
        if (angles < 64) throw GridEmpty("DiskGrid: need at least 64 angles");
        double prev = 0.0;
        for (double r : radii) {
            if (!(r > prev && r <= kRMax)) throw GridEmpty("DiskGrid: radii must increase within (0, r_max]");
            prev = r;
        }
    }

    /// Radii geometric-spaced toward r_max (gaps to the boundary shrink
    /// geometrically), ending exactly at r_max.
    static DiskGrid geometric(int n_radii = 64, int n_angles = 512, double r_max = kRMax,
                              double r_min = 0.05) {
        if (n_radii < 1 || !(r_min > 0.0 && r_min < r_max && r_max <= kRMax))
            throw GridEmpty("DiskGrid: bad geometric parameters");
        DiskGrid g;
        g.angles = n_angles;
        if (n_radii == 1) {
            g.radii.push_back(r_max);
        } else {
            const double t = std::pow((1.0 - r_max) / (1.0 - r_min), 1.0 / (n_radii - 1));
            for (int j = 0; j < n_radii; ++j) g.radii.push_back(1.0 - (1.0 - r_min) * std::pow(t, j));
            g.radii.back() = r_max;
        }
        g.validate();
        return g;
    }
};

/// Outcome of one theorem check over a grid.
struct Verdict {
    double hyp_sup = -std::numeric_limits<double>::infinity();
    double hyp_bound = 0.0;
    bool hyp_holds = false;
    std::vector<cplx> hyp_undefined;  // first few undefined sample points
    long undefined_count = 0;
    double concl_sup = 0.0;
    double concl_bound = 1.0;
    bool concl_holds = false;
    bool consistent = false;
    cplx witness_hyp{};
    cplx witness_concl{};
    double reliability = 0.0;  // max eval tail bound encountered
    int w_vanish = 0;          // observed vanishing order of w (>= n allowed)

    bool reliable() const { return reliability <= kReliabilityTol; }
};

/// x^e with the conventions 0^0 = 1 and x^0 = 1 for x >= 0; empty when the
/// base is negative and the exponent non-integer (hypothesis-undefined).
inline std::optional<double> real_power(double base, double e) {
    if (e == 0.0) return 1.0;
    if (base < 0.0 && std::abs(e - std::round(e)) > 1e-12) return std::nullopt;
    return std::pow(base, e);
}

/// Closed-form right-hand side of the hypothesis inequality.
inline double rhs_bound(const TheoremParams& tp) {
    tp.validate();
    switch (tp.id) {
        case 1:
        case 4:
            return *real_power(tp.delta.real() + tp.mu * tp.n / 2.0, tp.gamma);
        case 2:
            return *real_power(tp.delta.real() + tp.alpha + tp.mu * tp.n / 2.0, tp.gamma);
        default: {  // 3, 5
            const double d = tp.delta.real();
            return *real_power(tp.rho, tp.beta) *
                   *real_power(d + tp.mu * tp.rho * tp.n / (1.0 + tp.rho), tp.gamma);
        }
    }
}

inline double concl_bound_of(const TheoremParams& tp) {
    return (tp.id == 3 || tp.id == 5) ? tp.rho : 1.0;
}

/// Precomputed series bundle for fast pointwise hypothesis evaluation.
class TheoremEvaluator {
  public:
    TheoremEvaluator(const TheoremParams& tp, const FunctionPair& p)
        : tp_(tp),
          dir_((tp.id == 4 || tp.id == 5) ? Direction::Reciprocal : Direction::Forward),
          w_(w_series(p, tp.mu, dir_)),
          combo_(make_combo(tp, p)),
          fprime_(derivative(p.f.series())),
          g_(p.g.series()) {}

    struct Sample {
        double lhs = 0.0;
        bool defined = true;
        double wabs = 0.0;
        double tail = 0.0;
    };

    Sample at(cplx z) const {
        Sample s;
        const EvalResult we = eval(w_, z);
        const EvalResult ce = eval(combo_, z);
        const EvalResult fe = eval(fprime_, z);
        const EvalResult ge = eval(g_, z);
        s.wabs = std::abs(we.value);
        s.tail = std::max(std::max(we.tail_bound, ce.tail_bound), std::max(fe.tail_bound, ge.tail_bound));
        if (std::abs(fe.value) < 1e-12 || std::abs(ge.value) < 1e-12) {
            s.defined = false;
            return s;
        }
        const cplx base = tp_.delta + ce.value;
        std::optional<double> factor2;
        if (tp_.id == 3 || tp_.id == 5) {
            factor2 = real_power(std::abs(base), tp_.gamma);
        } else {
            factor2 = real_power(base.real(), tp_.gamma);
        }
        if (!factor2) {
            s.defined = false;
            return s;
        }
        s.lhs = *real_power(s.wabs, tp_.beta) * *factor2;
        return s;
    }

    const AnalyticSeries& w() const { return w_; }

  private:
    static AnalyticSeries make_combo(const TheoremParams& tp, const FunctionPair& p) {
        if (tp.id == 2) {
            // 1 + zf''/f' (the g-term stays on the left for theorem 2).
            const AnalyticSeries fp = derivative(p.f.series());
            return add_const(div(shift_up(derivative(fp), 1), fp), 1.0);
        }
        return logderiv_combo(p, (tp.id == 4 || tp.id == 5) ? Direction::Reciprocal : Direction::Forward);
    }

    TheoremParams tp_;
    Direction dir_;
    AnalyticSeries w_;
    AnalyticSeries combo_;
    AnalyticSeries fprime_;
    AnalyticSeries g_;
};

/// Evaluates the theorem-specific left-hand side at one point; empty when
/// the hypothesis is undefined there.
inline std::optional<double> lhs_at(const TheoremParams& tp, const FunctionPair& p, cplx z) {
    tp.validate();
    if (std::abs(z) > kRMax) throw OutsideDisk("lhs_at: |z| > r_max");
    const TheoremEvaluator ev(tp, p);
    const TheoremEvaluator::Sample s = ev.at(z);
    if (s.tail > kReliabilityTol) throw EvaluationUnreliable("lhs_at: tail bound above threshold");
    if (!s.defined) return std::nullopt;
    return s.lhs;
}

/// Full grid check: hypothesis sup vs bound, conclusion sup vs bound, and
/// the implication-consistency verdict. Undefined hypothesis points count
/// as hypothesis failures, never as silent passes.
inline Verdict check(const TheoremParams& tp, const FunctionPair& p, const DiskGrid& grid) {
    tp.validate();
    grid.validate();
    if (tp.n != p.n) throw SpecInvalid("check: TheoremParams.n must equal min(n1,n2) of the pair");
    const TheoremEvaluator ev(tp, p);

    Verdict v;
    v.hyp_bound = rhs_bound(tp);
    v.concl_bound = concl_bound_of(tp);
    v.w_vanish = vanishing_order(ev.w());

    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const cplx z = std::polar(r, 2.0 * M_PI * j / grid.angles);
            const TheoremEvaluator::Sample s = ev.at(z);
            v.reliability = std::max(v.reliability, s.tail);
            if (!s.defined) {
                if (v.hyp_undefined.size() < 64) v.hyp_undefined.push_back(z);
                ++v.undefined_count;
            } else if (s.lhs > v.hyp_sup) {
                v.hyp_sup = s.lhs;
                v.witness_hyp = z;
            }
            if (s.wabs > v.concl_sup) {
                v.concl_sup = s.wabs;
                v.witness_concl = z;
            }
        }
    }
    const bool sup_ok = (tp.id == 2) ? (v.hyp_sup <= v.hyp_bound) : (v.hyp_sup < v.hyp_bound);
    v.hyp_holds = (v.undefined_count == 0) && sup_ok;
    v.concl_holds = v.concl_sup < v.concl_bound;
    v.consistent = !v.hyp_holds || v.concl_holds;
    return v;
}

/// inf over the grid of Re(zg'/g) - alpha; positive certifies membership in
/// the starlike-of-order-alpha class on the sampled region.
inline double starlike_margin(const NormalizedFunction& g, double alpha, const DiskGrid& grid) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw SpecInvalid("starlike_margin: alpha must lie in [0,1)");
    grid.validate();
    const AnalyticSeries s = div(shift_up(derivative(g.series()), 1), g.series());
    double margin = std::numeric_limits<double>::infinity();
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const EvalResult e = eval(s, std::polar(r, 2.0 * M_PI * j / grid.angles));
            if (e.tail_bound > kReliabilityTol)
                throw EvaluationUnreliable("starlike_margin: tail bound above threshold");
            margin = std::min(margin, e.value.real() - alpha);
        }
    }
    return margin;
}

/// inf over the grid of Re(1 + w) with w the forward comparison function;
/// positive certifies strong close-to-convexity of order mu against this g.
inline double stc_margin(const FunctionPair& p, double mu, const DiskGrid& grid) {
    grid.validate();
    const AnalyticSeries w = w_series(p, mu, Direction::Forward);
    double margin = std::numeric_limits<double>::infinity();
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const EvalResult e = eval(w, std::polar(r, 2.0 * M_PI * j / grid.angles));
            if (e.tail_bound > kReliabilityTol)
                throw EvaluationUnreliable("stc_margin: tail bound above threshold");
            margin = std::min(margin, 1.0 + e.value.real());
        }
    }
    return margin;
}

}  // namespace stc
