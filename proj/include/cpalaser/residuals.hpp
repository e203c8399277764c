#pragma once

#include "bilayer.hpp"

// Root functions of the self-dual problem, scaled by K so tolerances are
// comparable across the spectrum:
//
//     ss_residual  = Gamma_{1,-} / K            (zero <=> M22 = 0, lasing)
//     cpa_residual = (Gamma_{1,+} - 2 Gamma_{2,+}) / K   (zero <=> M11 = 0)
//
// Time reversal ties the two: cpa_residual(slab) = -conj(ss_residual(conj slab)).

namespace cpalaser {

inline Complex ss_residual(const BilayerSlab& slab, Wavenumber k) {
    return gamma_ss_closed(slab, k) / k.K;
}

inline Complex cpa_residual(const BilayerSlab& slab, Wavenumber k) {
    return gamma_cpa_closed(slab, k) / k.K;
}

namespace detail {

inline Complex ss_residual_raw(Complex n1, Complex n2, double K) {
    return gamma_ss_closed_raw(n1, n2, K) / K;
}

inline Complex cpa_residual_raw(Complex n1, Complex n2, double K) {
    return gamma_cpa_closed_raw(n1, n2, K) / K;
}

}  // namespace detail

}  // namespace cpalaser
