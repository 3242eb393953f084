#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "stc/jack.hpp"
#include "stc/series.hpp"

namespace stc {

/// Convex combination of Mobius kernels (1+e^{i phi}z)/(1-e^{i phi}z);
/// realizes functions with positive real part.
struct HerglotzAtoms {
    std::vector<double> weights;
    std::vector<double> phases;

    void validate() const {
        if (weights.empty() || weights.size() != phases.size())
            throw SpecInvalid("HerglotzAtoms: weights/phases size mismatch");
        if (weights.size() > 8) throw SpecInvalid("HerglotzAtoms: at most 8 atoms");
        double s = 0.0;
        for (double w : weights) {
            if (!(w > 0.0)) throw SpecInvalid("HerglotzAtoms: weights must be positive");
            s += w;
        }
        if (std::abs(s - 1.0) > 1e-12) throw SpecInvalid("HerglotzAtoms: weights must sum to 1");
    }

    /// Seeded random atoms with phases kept >= 0.05 apart.
    static HerglotzAtoms random(std::uint64_t seed, int count) {
        if (count < 1 || count > 8) throw SpecInvalid("HerglotzAtoms: atom count must lie in [1,8]");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uphase(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> uw(0.1, 1.0);
        HerglotzAtoms a;
        while (static_cast<int>(a.phases.size()) < count) {
            const double p = uphase(rng);
            bool ok = true;
            for (double q : a.phases) {
                double d = std::abs(std::remainder(p - q, 2.0 * M_PI));
                if (d < 0.05) { ok = false; break; }
            }
            if (ok) a.phases.push_back(p);
        }
        double s = 0.0;
        for (int i = 0; i < count; ++i) {
            a.weights.push_back(uw(rng));
            s += a.weights.back();
        }
        for (double& w : a.weights) w /= s;
        // Renormalize exactly against rounding in the division above.
        double s2 = 0.0;
        for (std::size_t i = 0; i + 1 < a.weights.size(); ++i) s2 += a.weights[i];
        a.weights.back() = 1.0 - s2;
        a.validate();
        return a;
    }
};

/// Generalized Koebe function z/(1-z)^{2(1-alpha)}; the extremal member of
/// the starlike-of-order-alpha class. zg'/g = (1+(1-2 alpha)z)/(1-z).
inline NormalizedFunction koebe_alpha(double alpha, int order = kDefaultOrder) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw SpecInvalid("koebe_alpha: alpha must lie in [0,1)");
    const AnalyticSeries h = AnalyticSeries::monomial(-1.0, 1, order - 1);
    const AnalyticSeries factor = pow1p(h, -2.0 * (1.0 - alpha));
    return NormalizedFunction::infer(shift_up(factor, 1));
}

/// Random starlike function of order alpha: solves
/// zg'/g = alpha + (1-alpha) p(z^index) with p the Herglotz sum, then
/// integrates the log-derivative and exponentiates at series level.
inline NormalizedFunction random_starlike(double alpha, const HerglotzAtoms& atoms, int order = kDefaultOrder,
                                          int index = 1) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw SpecInvalid("random_starlike: alpha must lie in [0,1)");
    if (index < 1) throw SpecInvalid("random_starlike: index must be >= 1");
    atoms.validate();
    // s = zg'/g as a series: s_0 = 1, s_{k*index} = 2(1-alpha) sum_j w_j u_j^k.
    std::vector<cplx> s(static_cast<std::size_t>(order) + 1, cplx{});
    s[0] = 1.0;
    std::vector<cplx> upow(atoms.phases.size());
    for (std::size_t j = 0; j < atoms.phases.size(); ++j) upow[j] = 1.0;
    for (int k = 1; k * index <= order; ++k) {
        cplx acc{};
        for (std::size_t j = 0; j < atoms.phases.size(); ++j) {
            upow[j] *= std::polar(1.0, atoms.phases[j]);
            acc += atoms.weights[j] * upow[j];
        }
        s[static_cast<std::size_t>(k * index)] = 2.0 * (1.0 - alpha) * acc;
    }
    const AnalyticSeries zlogd = AnalyticSeries(std::move(s));     // zg'/g
    const AnalyticSeries ratio = shift_down(add_const(zlogd, -1.0), 1);  // (zg'/g - 1)/z
    const AnalyticSeries logg = antiderivative0(ratio);            // log(g/z)
    return NormalizedFunction::infer(shift_up(exp_series(logg), 1));
}

/// Generator description for the comparison function w.
struct WSpec {
    enum class Kind { ScaledMonomial, MobiusMonomial, Poly };
    Kind kind = Kind::ScaledMonomial;
    cplx c{};               // scale (ScaledMonomial, MobiusMonomial)
    int m = 1;              // monomial degree
    cplx a{};               // Mobius parameter, |a| < 1
    std::vector<cplx> coeffs;  // Poly: w = coeffs[0] z + coeffs[1] z^2 + ...

    static WSpec scaled_monomial(cplx c, int m) {
        WSpec s;
        s.kind = Kind::ScaledMonomial;
        s.c = c;
        s.m = m;
        return s;
    }
    static WSpec mobius_monomial(cplx c, int m, cplx a) {
        WSpec s;
        s.kind = Kind::MobiusMonomial;
        s.c = c;
        s.m = m;
        s.a = a;
        return s;
    }
    static WSpec poly(std::vector<cplx> coeffs) {
        WSpec s;
        s.kind = Kind::Poly;
        s.coeffs = std::move(coeffs);
        return s;
    }
};

/// Realizes the series of w from its spec. The vanishing order must be
/// at least n so that the pair stays compatible with the class index.
inline AnalyticSeries realize_w(const WSpec& spec, int n, int order = kDefaultOrder) {
    if (n < 1) throw SpecInvalid("realize_w: n must be >= 1");
    switch (spec.kind) {
        case WSpec::Kind::ScaledMonomial: {
            if (spec.m < n) throw SpecInvalid("realize_w: monomial degree below class index");
            return AnalyticSeries::monomial(spec.c, spec.m, order);
        }
        case WSpec::Kind::MobiusMonomial: {
            if (spec.m < n) throw SpecInvalid("realize_w: monomial degree below class index");
            if (!(std::abs(spec.a) < 1.0)) throw SpecInvalid("realize_w: Mobius parameter needs |a| < 1");
            std::vector<cplx> num(static_cast<std::size_t>(order) + 1, cplx{});
            std::vector<cplx> den(static_cast<std::size_t>(order) + 1, cplx{});
            num[0] = 1.0;
            den[0] = 1.0;
            if (order >= 1) {
                num[1] = spec.a;
                den[1] = std::conj(spec.a);
            }
            const AnalyticSeries factor = div(AnalyticSeries(std::move(num)), AnalyticSeries(std::move(den)));
            return scale(shift_up(factor, spec.m), spec.c);
        }
        case WSpec::Kind::Poly: {
            if (spec.coeffs.empty()) throw SpecInvalid("realize_w: empty polynomial");
            std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
            for (std::size_t j = 0; j < spec.coeffs.size(); ++j) {
                if (j + 1 > static_cast<std::size_t>(order)) break;
                c[j + 1] = spec.coeffs[j];
            }
            AnalyticSeries w{std::move(c)};
            if (w.vanish() < n) throw SpecInvalid("realize_w: polynomial vanishes below class index");
            return w;
        }
    }
    throw SpecInvalid("realize_w: unknown kind");
}

/// Constructive inverse of the forward definition: sets zf' = g (1+w)^mu
/// and integrates. The round trip w_series((f,g), mu, Forward) = w holds up
/// to truncation; if additionally sup|w| < 1 the pair certifies membership.
inline NormalizedFunction synth_from_w(const NormalizedFunction& g, double mu, const AnalyticSeries& w) {
    if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("synth_from_w: mu must lie in (0,1]");
    if (w.vanish() < 1) throw BranchPrecondition("synth_from_w: w(0) != 0");
    const AnalyticSeries zfp = mul(g.series(), pow1p(w, mu));
    return NormalizedFunction::infer(antiderivative0(shift_down(zfp, 1)));
}

/// Reciprocal-direction variant: sets zf' = g (1+w)^{-mu}, so that
/// (g/(zf'))^{1/mu} - 1 recovers w.
inline NormalizedFunction synth_from_w_reciprocal(const NormalizedFunction& g, double mu,
                                                  const AnalyticSeries& w) {
    if (!(mu > 0.0 && mu <= 1.0)) throw SpecInvalid("synth_from_w_reciprocal: mu must lie in (0,1]");
    if (w.vanish() < 1) throw BranchPrecondition("synth_from_w_reciprocal: w(0) != 0");
    const AnalyticSeries zfp = mul(g.series(), pow1p(w, -mu));
    return NormalizedFunction::infer(antiderivative0(shift_down(zfp, 1)));
}

}  // namespace stc
