#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "reduced.hpp"
#include "residuals.hpp"

// Analytic seed generator for non-PT self-dual points.
//
// For target real parts eta1, eta2 and a target wavenumber K the resonance
// integers are
//
//     m- = round(K eta+ / 4 pi),      m+ = round(K |eta-| / 4 pi),
//
// and the gain/loss combinations follow from the kappa-neglected sigma:
//
//     kappa- ~ +- (2/K) ln( sqrt(sigma^2 eta+^2 / eta-^2 + 1) +- sigma eta+ / eta- )
//     kappa+ ~ +- (2/K) ln( sqrt(sigma^2 eta-^2 / eta+^2 + 1) +- sigma eta- / eta+ )
//
// The four signs are independent, so all sixteen combinations are emitted; the
// squared system cannot distinguish them, hence each seed is scored by the
// unsquared residuals and the list is returned sorted best first. Valid
// conjugate seeds come out tied, mixed-sign combinations score visibly worse.

namespace cpalaser {

struct SignBranch {
    int outer_minus = +1;  // overall sign of kappa-
    int inner_minus = +1;  // sign inside the kappa- logarithm (u+ branch)
    int outer_plus = +1;   // overall sign of kappa+
    int inner_plus = +1;   // sign inside the kappa+ logarithm (u- branch)

    std::string str() const {
        auto c = [](int s) { return s > 0 ? '+' : '-'; };
        return {c(outer_minus), c(inner_minus), c(outer_plus), c(inner_plus)};
    }
};

struct ApproxSeed {
    double eta1 = 0.0, eta2 = 0.0;
    double K_target = 0.0;
    int m_minus = 0, m_plus = 0;
    SignBranch signs;
    double kappa_plus = 0.0, kappa_minus = 0.0;  // kappa1 +- kappa2
    double kappa1 = 0.0, kappa2 = 0.0;
    double residual_ss = 0.0, residual_cpa = 0.0;  // |scaled residual| at the seed
    double residual = 0.0;                         // combined score used for ranking
    bool physical = true;                          // |kappa_j| <= 1e-2

    BilayerSlab slab() const {
        return BilayerSlab{ComplexIndex{eta1, kappa1}, ComplexIndex{eta2, kappa2}, {}};
    }

    ApproxSeed conjugated() const {
        ApproxSeed s = *this;
        s.kappa_plus = -kappa_plus;
        s.kappa_minus = -kappa_minus;
        s.kappa1 = -kappa1;
        s.kappa2 = -kappa2;
        s.signs.outer_minus = -signs.outer_minus;
        s.signs.outer_plus = -signs.outer_plus;
        std::swap(s.residual_ss, s.residual_cpa);
        return s;
    }
};

namespace detail {

// nearest positive integer(s); an exact half keeps both neighbours so the
// basin is not missed
inline std::vector<int> mode_candidates(double x) {
    const double f = std::floor(x);
    const double frac = x - f;
    std::vector<int> out;
    if (std::abs(frac - 0.5) < 1e-9) {
        out.push_back(std::max(1, int(f)));
        out.push_back(std::max(1, int(f) + 1));
        if (out[0] == out[1]) out.pop_back();
    } else {
        out.push_back(std::max(1, int(std::llround(x))));
    }
    return out;
}

}  // namespace detail

inline std::vector<ApproxSeed> generate_seeds(double eta1, double eta2,
                                              double K_target) {
    if (!(std::isfinite(eta1) && std::isfinite(eta2) && eta1 > 1.0 && eta2 > 1.0))
        throw std::domain_error("generate_seeds: eta1, eta2 must exceed 1");
    if (!(std::isfinite(K_target) && K_target > 0.0))
        throw std::domain_error("generate_seeds: K_target must be positive");
    const double eta_p = eta1 + eta2;
    const double eta_m = eta1 - eta2;
    if (std::abs(eta_m) < 0.1)
        throw near_pt_error(
            "generate_seeds: |eta1 - eta2| < 0.1 is the near-PT regime; "
            "use the PT special case instead");

    const double sigma = sigma_real(eta1, eta2);
    const double xm = sigma * eta_m / eta_p;  // argument of the kappa+ log
    const double xp = sigma * eta_p / eta_m;  // argument of the kappa- log

    const std::vector<int> mm = detail::mode_candidates(K_target * eta_p / (4.0 * pi));
    const std::vector<int> mp =
        detail::mode_candidates(K_target * std::abs(eta_m) / (4.0 * pi));

    std::vector<ApproxSeed> seeds;
    seeds.reserve(16 * mm.size() * mp.size());
    const Wavenumber kw{K_target};

    for (int m_minus : mm)
        for (int m_plus : mp)
            for (int som : {+1, -1})
                for (int sim : {+1, -1})
                    for (int sop : {+1, -1})
                        for (int sip : {+1, -1}) {
                            ApproxSeed s;
                            s.eta1 = eta1;
                            s.eta2 = eta2;
                            s.K_target = K_target;
                            s.m_minus = m_minus;
                            s.m_plus = m_plus;
                            s.signs = SignBranch{som, sim, sop, sip};
                            const double lu_plus =
                                std::log(std::sqrt(xp * xp + 1.0) + sim * xp);
                            const double lu_minus =
                                std::log(std::sqrt(xm * xm + 1.0) + sip * xm);
                            s.kappa_minus = som * 2.0 / K_target * lu_plus;
                            s.kappa_plus = sop * 2.0 / K_target * lu_minus;
                            s.kappa1 = 0.5 * (s.kappa_plus + s.kappa_minus);
                            s.kappa2 = 0.5 * (s.kappa_plus - s.kappa_minus);
                            s.physical = std::abs(s.kappa1) <= 1e-2 &&
                                         std::abs(s.kappa2) <= 1e-2;
                            const Complex n1{eta1, s.kappa1};
                            const Complex n2{eta2, s.kappa2};
                            s.residual_ss =
                                std::abs(detail::ss_residual_raw(n1, n2, K_target));
                            s.residual_cpa =
                                std::abs(detail::cpa_residual_raw(n1, n2, K_target));
                            s.residual = std::hypot(s.residual_ss, s.residual_cpa);
                            seeds.push_back(s);
                        }

    std::sort(seeds.begin(), seeds.end(), [](const ApproxSeed& a, const ApproxSeed& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        if (a.kappa1 != b.kappa1) return a.kappa1 > b.kappa1;
        if (a.kappa2 != b.kappa2) return a.kappa2 > b.kappa2;
        if (a.m_minus != b.m_minus) return a.m_minus < b.m_minus;
        if (a.m_plus != b.m_plus) return a.m_plus < b.m_plus;
        return a.signs.str() < b.signs.str();
    });
    return seeds;
}

// the closed-form inversion behind the seeds assumes K well above the optical
// scale; below this the kappa formulas degrade
inline bool seed_scheme_trusted(double K_target) { return K_target > 1e2; }

}  // namespace cpalaser
