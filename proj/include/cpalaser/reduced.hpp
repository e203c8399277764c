#pragma once

#include <cmath>
#include <limits>

#include "types.hpp"

// Reduced transcendental system. Squaring the two root conditions and using
// sin^2 + cos^2 = 1 collapses them to
//
//     cos(n- K / 2) = +- i n+ s / n-,      cos(n+ K / 2) = +- i n- s / n+,
//
// with  s = sqrt( (n1^2 + 1)(n2^2 + 1) / ((n1^2 - 1)(n2^2 - 1)) ).
//
// Inverting the cosines introduces u-+ = sqrt(x^2 + 1) +- x (with
// x = n-+ s / n+-) and the principal arguments phi-+ = arg(+- i u-+). The
// squaring step creates spurious sign branches; they are enumerated downstream
// and filtered against the unsquared residuals, never trusted on their own.

namespace cpalaser {

struct ReducedBranch {
    int u_minus_sign = +1;    // sign in u- = sqrt(..) +- n- s / n+
    int u_plus_sign = +1;     // sign in u+ = sqrt(..) +- n+ s / n-
    int phi_minus_sign = +1;  // sign inside arg(+- i u-)
    int phi_plus_sign = +1;   // sign inside arg(+- i u+)
};

struct ReducedSystemValues {
    Complex s;          // full complex s
    Complex u_minus;    // branch-resolved u-
    Complex u_plus;     // branch-resolved u+
    double sigma;       // kappa-neglected real approximation of s (NaN if undefined)
    double phi_minus;   // arg(+- i u-), in (-pi, pi]
    double phi_plus;    // arg(+- i u+), in (-pi, pi]
};

// kappa-neglected sigma; real and >= 1 whenever eta1, eta2 > 1
inline double sigma_real(double eta1, double eta2) {
    const double d1 = eta1 * eta1 - 1.0;
    const double d2 = eta2 * eta2 - 1.0;
    if (d1 == 0.0 || d2 == 0.0)
        throw std::domain_error("sigma_real: eta^2 = 1 is a pole");
    const double r = (eta1 * eta1 + 1.0) * (eta2 * eta2 + 1.0) / (d1 * d2);
    return std::sqrt(r);  // NaN if the radicand is negative (some eta < 1)
}

inline ReducedSystemValues reduced_values(const BilayerSlab& slab,
                                          const ReducedBranch& branch = {}) {
    const Complex n1 = slab.n1.value();
    const Complex n2 = slab.n2.value();
    const Complex d1 = n1 * n1 - 1.0;
    const Complex d2 = n2 * n2 - 1.0;
    if (std::abs(d1) < 1e-14 * std::max(1.0, std::norm(n1)) ||
        std::abs(d2) < 1e-14 * std::max(1.0, std::norm(n2)))
        throw std::domain_error(
            "reduced_values: n^2 = 1 (vacuum-matched layer) is a pole of s");
    const Complex np = n1 + n2;
    const Complex nm = n1 - n2;
    if (std::abs(np) < 1e-300 || std::abs(nm) < 1e-300)
        throw std::domain_error("reduced_values: n+ or n- vanishes");

    ReducedSystemValues rv;
    rv.s = std::sqrt((n1 * n1 + 1.0) * (n2 * n2 + 1.0) / (d1 * d2));

    const Complex xm = nm * rv.s / np;
    const Complex xp = np * rv.s / nm;
    rv.u_minus = std::sqrt(xm * xm + 1.0) + double(branch.u_minus_sign) * xm;
    rv.u_plus = std::sqrt(xp * xp + 1.0) + double(branch.u_plus_sign) * xp;
    rv.phi_minus = std::arg(double(branch.phi_minus_sign) * iunit * rv.u_minus);
    rv.phi_plus = std::arg(double(branch.phi_plus_sign) * iunit * rv.u_plus);

    const double e1 = slab.n1.eta, e2 = slab.n2.eta;
    rv.sigma = (e1 != 1.0 && e2 != 1.0)
                   ? sigma_real(e1, e2)
                   : std::numeric_limits<double>::quiet_NaN();
    return rv;
}

}  // namespace cpalaser
