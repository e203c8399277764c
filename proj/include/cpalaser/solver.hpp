#pragma once

#include <string>
#include <vector>

#include "newton.hpp"
#include "reduced.hpp"
#include "residuals.hpp"
#include "seeds.hpp"

// Newton refinement of seeded self-dual points.
//
// The default mode fixes K and solves the four real equations
// Re/Im of ss_residual and cpa_residual for (eta1, eta2, kappa1, kappa2); the
// refined real parts drift by a few 1e-3 from the seeded targets, which is the
// expected behavior. A least-squares variant holds the real parts instead and
// solves for (kappa1, kappa2, K); with four equations and three unknowns it
// succeeds only when a root genuinely exists in that slice. Acceptance is
// always judged on the unsquared residuals, never on the squared reduced
// system, whose spurious branches the seeds may inherit.

namespace cpalaser {

struct SelfDualSolution {
    ComplexIndex n1, n2;
    double K = 0.0;
    int m_minus = 0, m_plus = 0;
    double residual_ss = 0.0;   // |Gamma_{1,-}| / K at the solution
    double residual_cpa = 0.0;  // |Gamma_{1,+} - 2 Gamma_{2,+}| / K
    int iterations = 0;
    ApproxSeed seed;

    BilayerSlab slab() const { return BilayerSlab{n1, n2, {}}; }

    SelfDualSolution conjugated() const {
        SelfDualSolution s = *this;
        s.n1 = n1.conjugated();
        s.n2 = n2.conjugated();
        s.seed = seed.conjugated();
        std::swap(s.residual_ss, s.residual_cpa);
        return s;
    }
};

enum class RefineStatus { converged, max_iterations, singular_jacobian, stalled };

struct RefineOutcome {
    RefineStatus status = RefineStatus::max_iterations;
    SelfDualSolution solution;       // meaningful when converged
    double residual_norm = 0.0;      // final euclidean norm of the 4-vector
    int iterations = 0;
    double condition_estimate = 0.0;
    bool least_squares = false;
    std::string message;

    bool converged() const { return status == RefineStatus::converged; }
};

// solutions closer than this componentwise are one root
inline constexpr double solution_dedup_tol = 1e-8;

inline bool same_solution(const SelfDualSolution& a, const SelfDualSolution& b) {
    return std::abs(a.n1.eta - b.n1.eta) <= solution_dedup_tol &&
           std::abs(a.n2.eta - b.n2.eta) <= solution_dedup_tol &&
           std::abs(a.n1.kappa - b.n1.kappa) <= solution_dedup_tol &&
           std::abs(a.n2.kappa - b.n2.kappa) <= solution_dedup_tol &&
           std::abs(a.K - b.K) <= solution_dedup_tol;
}

namespace detail {

inline RefineStatus map_status(NewtonStatus s) {
    switch (s) {
        case NewtonStatus::converged: return RefineStatus::converged;
        case NewtonStatus::singular_jacobian: return RefineStatus::singular_jacobian;
        case NewtonStatus::stalled: return RefineStatus::stalled;
        default: return RefineStatus::max_iterations;
    }
}

inline std::string failure_text(const char* what, double residual_norm) {
    return std::string(what) + "; final residual norm " + std::to_string(residual_norm);
}

inline SelfDualSolution make_solution(double eta1, double kappa1, double eta2,
                                      double kappa2, double K, const ApproxSeed& seed,
                                      int iterations) {
    SelfDualSolution sol;
    sol.n1 = ComplexIndex{eta1, kappa1};
    sol.n2 = ComplexIndex{eta2, kappa2};
    sol.K = K;
    sol.m_minus = seed.m_minus;
    sol.m_plus = seed.m_plus;
    sol.iterations = iterations;
    sol.seed = seed;
    const Wavenumber kw{K};
    sol.residual_ss = std::abs(ss_residual(sol.slab(), kw));
    sol.residual_cpa = std::abs(cpa_residual(sol.slab(), kw));
    return sol;
}

}  // namespace detail

// fixed-K refinement in (eta1, eta2, kappa1, kappa2)
inline RefineOutcome refine(const ApproxSeed& seed,
                            const detail::NewtonOptions& opt = {}) {
    const double K = seed.K_target;
    if (!(std::isfinite(K) && K > 0.0))
        throw std::domain_error("refine: seed carries no valid K_target");

    auto residual4 = [K](const std::array<double, 4>& p) -> std::array<double, 4> {
        const Complex n1{p[0], p[2]};
        const Complex n2{p[1], p[3]};
        const Complex rs = detail::ss_residual_raw(n1, n2, K);
        const Complex rc = detail::cpa_residual_raw(n1, n2, K);
        return {rs.real(), rs.imag(), rc.real(), rc.imag()};
    };

    // neighbouring roots sit ~4 pi / K apart in the etas; cap steps so one
    // iteration cannot swing the trig arguments past the seeded basin
    detail::NewtonOptions o = opt;
    o.max_step = std::min(opt.max_step, 0.5 * pi / K);

    const auto nr = detail::newton_solve<4, 4>(
        residual4, {seed.eta1, seed.eta2, seed.kappa1, seed.kappa2}, o);

    RefineOutcome out;
    out.status = detail::map_status(nr.status);
    out.residual_norm = nr.residual_norm;
    out.iterations = nr.iterations;
    out.condition_estimate = nr.condition_estimate;
    if (out.converged()) {
        out.solution = detail::make_solution(nr.x[0], nr.x[2], nr.x[1], nr.x[3], K,
                                             seed, nr.iterations);
    } else if (out.status == RefineStatus::singular_jacobian) {
        out.message = "singular Jacobian (condition estimate above limit)";
    } else {
        out.message = detail::failure_text("no convergence", nr.residual_norm);
    }
    return out;
}

// least-squares variant: real parts pinned to the seed, unknowns (kappa1, kappa2, K)
inline RefineOutcome refine_gain_and_wavenumber(const ApproxSeed& seed,
                                                const detail::NewtonOptions& opt = {}) {
    const double e1 = seed.eta1, e2 = seed.eta2;

    auto residual4 = [e1, e2](const std::array<double, 3>& p) -> std::array<double, 4> {
        const Complex n1{e1, p[0]};
        const Complex n2{e2, p[1]};
        const double K = std::max(p[2], 1e-6);
        const Complex rs = detail::ss_residual_raw(n1, n2, K);
        const Complex rc = detail::cpa_residual_raw(n1, n2, K);
        return {rs.real(), rs.imag(), rc.real(), rc.imag()};
    };

    detail::NewtonOptions o = opt;
    o.fd_step_floor = 1e-3;
    o.max_step = std::min(opt.max_step, 0.5 * pi / (e1 + e2));
    const auto nr = detail::newton_solve<4, 3>(
        residual4, {seed.kappa1, seed.kappa2, seed.K_target}, o);

    RefineOutcome out;
    out.least_squares = true;
    out.status = detail::map_status(nr.status);
    out.residual_norm = nr.residual_norm;
    out.iterations = nr.iterations;
    out.condition_estimate = nr.condition_estimate;
    if (out.converged()) {
        out.solution =
            detail::make_solution(e1, nr.x[0], e2, nr.x[1], nr.x[2], seed, nr.iterations);
    } else {
        out.message = detail::failure_text("least-squares refinement did not reach a root",
                                           nr.residual_norm);
    }
    return out;
}

// PT special case: eta1 = eta2 = n0, kappa1 = -kappa2 = kappa, unknowns (kappa, K).
// Balancing the root conditions for this family requires sin(n0 K) > 0 with
// cos(n0 K) ~ 0, so the roots sit just past n0 K = (2 m + 1/2) pi with the gain
// magnitude fixed by kappa cosh(kappa K) = n0 sigma. The seeded wavenumber
// K0 = 2 pi m / n0 is therefore snapped to that node before Newton runs.
inline RefineOutcome pt_special_case(double n0, int mode,
                                     const detail::NewtonOptions& opt = {}) {
    if (!(std::isfinite(n0) && n0 > 1.0))
        throw std::domain_error("pt_special_case: n0 must exceed 1");
    if (mode < 1) throw std::domain_error("pt_special_case: mode must be >= 1");

    const double sigma0 = (n0 * n0 + 1.0) / (n0 * n0 - 1.0);
    const double K_node = (2.0 * mode + 0.5) * pi / n0;

    // bisect kappa cosh(kappa K) = n0 sigma0 for the gain magnitude
    auto g = [&](double kap) { return kap * std::cosh(kap * K_node) - n0 * sigma0; };
    double lo = 0.0, hi = 1e-3;
    while (g(hi) < 0.0 && hi < 16.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    const double kappa0 = -0.5 * (lo + hi);  // gain in layer 1 by convention

    auto residual2 = [n0](const std::array<double, 2>& p) -> std::array<double, 2> {
        const Complex n1{n0, p[0]};
        const Complex n2{n0, -p[0]};
        const Complex rs = detail::ss_residual_raw(n1, n2, p[1]);
        return {rs.real(), rs.imag()};
    };

    detail::NewtonOptions o = opt;
    o.max_step = std::min(opt.max_step, 0.25 * pi / n0);
    const auto nr = detail::newton_solve<2, 2>(residual2, {kappa0, K_node}, o);

    ApproxSeed seed;
    seed.eta1 = seed.eta2 = n0;
    seed.K_target = 2.0 * pi * mode / n0;
    seed.m_minus = mode;
    seed.m_plus = 0;
    seed.kappa1 = kappa0;
    seed.kappa2 = -kappa0;
    seed.kappa_plus = 0.0;
    seed.kappa_minus = 2.0 * kappa0;
    {
        const Complex n1{n0, kappa0}, n2{n0, -kappa0};
        seed.residual_ss = std::abs(detail::ss_residual_raw(n1, n2, K_node));
        seed.residual_cpa = std::abs(detail::cpa_residual_raw(n1, n2, K_node));
        seed.residual = std::hypot(seed.residual_ss, seed.residual_cpa);
        seed.physical = std::abs(kappa0) <= 1e-2;
    }

    RefineOutcome out;
    out.status = detail::map_status(nr.status);
    out.residual_norm = nr.residual_norm;
    out.iterations = nr.iterations;
    out.condition_estimate = nr.condition_estimate;
    if (out.converged()) {
        // kappa2 = -kappa1 exactly by construction
        out.solution = detail::make_solution(n0, nr.x[0], n0, -nr.x[0], nr.x[1], seed,
                                             nr.iterations);
    } else {
        out.message = detail::failure_text("PT refinement did not converge",
                                           nr.residual_norm);
    }
    return out;
}

// Same-real-part admissibility. For n1 = n0 + i kappa1, n2 = n0 + i kappa2 the
// reduced system requires the real quantity (kappa1 - kappa2) cosh(...) to
// equal a complex right-hand side; expanding s to first order in the kappas,
// reality of that side comes down to
//
//     (kappa1 + kappa2) (1 + 4 n0^2 / (n0^4 - 1)) ~ 0,
//
// and since the bracket exceeds 1 for every n0 > 1, a self-dual point with
// equal real parts forces kappa1 ~ -kappa2, i.e. PT symmetry.
struct SameRealPartReport {
    double lhs = 0.0;               // (kappa1 - kappa2) cosh((kappa1 - kappa2) K / 2)
    Complex rhs_plus, rhs_minus;    // +-(2 n0 + i(kappa1 + kappa2)) s
    Complex s;                      // full s at the complex indices
    Complex s_first_order;          // sigma0 (1 + 2 i n0 (kappa1 + kappa2)/(n0^4 - 1))
    double factor = 0.0;            // 1 + 4 n0^2 / (n0^4 - 1)
    double reality_defect = 0.0;    // (kappa1 + kappa2) * factor
    bool admissible = false;        // defect compatible with kappa1 = -kappa2
    bool in_validity_regime = true; // |kappa_j| <= 1e-3 n0
};

inline SameRealPartReport same_real_part_analysis(double n0, double kappa1,
                                                  double kappa2, double K) {
    if (!(std::isfinite(n0) && n0 > 1.0))
        throw std::domain_error("same_real_part_analysis: n0 must exceed 1");
    if (!(std::isfinite(K) && K > 0.0))
        throw std::domain_error("same_real_part_analysis: K must be positive");

    SameRealPartReport rep;
    const double km = kappa1 - kappa2;
    const double kp = kappa1 + kappa2;
    rep.lhs = km * std::cosh(0.5 * km * K);

    const BilayerSlab slab{ComplexIndex{n0, kappa1}, ComplexIndex{n0, kappa2}, {}};
    const Complex n1 = slab.n1.value(), n2 = slab.n2.value();
    rep.s = std::sqrt((n1 * n1 + 1.0) * (n2 * n2 + 1.0) /
                      ((n1 * n1 - 1.0) * (n2 * n2 - 1.0)));
    rep.rhs_plus = (2.0 * n0 + iunit * kp) * rep.s;
    rep.rhs_minus = -rep.rhs_plus;

    const double sigma0 = (n0 * n0 + 1.0) / (n0 * n0 - 1.0);
    const double n4 = n0 * n0 * n0 * n0 - 1.0;
    rep.s_first_order = sigma0 * (1.0 + 2.0 * iunit * n0 * kp / n4);
    rep.factor = 1.0 + 4.0 * n0 * n0 / n4;
    rep.reality_defect = kp * rep.factor;
    rep.admissible = std::abs(kp) <= 1e-6 * std::abs(km);
    rep.in_validity_regime =
        std::abs(kappa1) <= 1e-3 * n0 && std::abs(kappa2) <= 1e-3 * n0;
    return rep;
}

// Grid scan of the scaled |Gamma_{1,-}| over real K. One complex equation in
// one real unknown is generically unsolvable, so strict local minima are
// reported as near-singularity candidates with their depth; each bracket is
// polished by golden-section search before reporting.
struct LasingCandidate {
    double K = 0.0;
    double depth = 0.0;  // |Gamma_{1,-}| / K at the polished minimum
};

inline std::vector<LasingCandidate> scan_lasing(const BilayerSlab& slab, double K_min,
                                                double K_max, int steps) {
    if (!(std::isfinite(K_min) && std::isfinite(K_max) && K_min > 0.0 && K_max > K_min))
        throw std::invalid_argument("scan_lasing: invalid window");
    if (steps < 2) throw std::invalid_argument("scan_lasing: steps must be >= 2");

    const Complex n1 = slab.n1.value(), n2 = slab.n2.value();
    auto depth_at = [&](double K) {
        return std::abs(detail::ss_residual_raw(n1, n2, K));
    };

    std::vector<double> grid(steps), val(steps);
    const double dK = (K_max - K_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        grid[i] = K_min + i * dK;
        val[i] = depth_at(grid[i]);
    }

    std::vector<LasingCandidate> out;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 1; i + 1 < steps; ++i) {
        if (!(val[i] < val[i - 1] && val[i] < val[i + 1])) continue;
        double a = grid[i - 1], b = grid[i + 1];
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = depth_at(x1), f2 = depth_at(x2);
        for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = depth_at(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = depth_at(x2);
            }
        }
        const double Km = 0.5 * (a + b);
        out.push_back(LasingCandidate{Km, depth_at(Km)});
    }
    return out;
}

}  // namespace cpalaser
