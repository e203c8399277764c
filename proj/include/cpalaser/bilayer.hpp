#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "types.hpp"

// Exact closed-form optics of the bilayer.
//
// With x := z/L + 1/2 and K := L k the Helmholtz equation becomes a
// Schrodinger problem on [0, 1] with a piecewise-constant potential. Its two
// canonical solutions
//
//     phi_1(0) = 1, phi_1'(0) = -iK      phi_2(0) = 1, phi_2'(0) = 0
//
// are plane-wave pairs in each layer,
//
//     phi_j(x) = A_j e^{iK n1 x} + B_j e^{-iK n1 x}       x in [0, 1/2)
//              = C_j e^{iK n2 x} + D_j e^{-iK n2 x}       x in [1/2, 1],
//
// and every transfer-matrix entry is built from the boundary functionals
// Gamma_{j,pm} = phi_j'(1) +- iK phi_j(1). The matrix returned by
// transfer_matrix() maps the (e^{ikz}, e^{-ikz}) amplitude pair on the left of
// the slab onto the pair on the right, in the frame centered at the slab
// midplane z = 0. det M = 1 identically; M22 = 0 marks a spectral singularity
// (lasing at threshold), M11 = 0 its time-reversed dual (coherent perfect
// absorption).

namespace cpalaser {

struct LayerSolution {
    Complex A1, B1, A2, B2;  // layer 1 amplitudes of phi_1, phi_2
    Complex C1, D1, C2, D2;  // layer 2 amplitudes
};

inline LayerSolution layer_coefficients(const BilayerSlab& slab, Wavenumber k) {
    const Complex n1 = slab.n1.value();
    const Complex n2 = slab.n2.value();
    if (std::abs(n1) < 1e-300 || std::abs(n2) < 1e-300)
        throw std::domain_error("layer_coefficients: zero refractive index");

    const Complex a1 = 0.5 * k.K * n1;
    const Complex a2 = 0.5 * k.K * n2;
    const Complex c1 = std::cos(a1);
    const Complex s1 = std::sin(a1);
    const Complex ep = std::exp(iunit * a2);
    const Complex em = std::exp(-iunit * a2);

    LayerSolution ls;
    ls.A1 = 0.5 * (1.0 - 1.0 / n1);
    ls.B1 = 0.5 * (1.0 + 1.0 / n1);
    ls.A2 = 0.5;
    ls.B2 = 0.5;
    ls.C1 = 0.5 * em * ((1.0 - 1.0 / n2) * c1 + iunit * (n1 / n2 - 1.0 / n1) * s1);
    ls.D1 = 0.5 * ep * ((1.0 + 1.0 / n2) * c1 - iunit * (n1 / n2 + 1.0 / n1) * s1);
    ls.C2 = 0.5 * em * (c1 + iunit * n1 * s1 / n2);
    ls.D2 = 0.5 * ep * (c1 - iunit * n1 * s1 / n2);
    return ls;
}

// phi_j / phi_j' evaluated from the stored amplitudes of a chosen layer.
// Evaluating both layers at x = 1/2 exposes the interface matching.
inline Complex phi_value(const LayerSolution& ls, const BilayerSlab& slab,
                         Wavenumber k, int j, int layer, double x) {
    if (j != 1 && j != 2) throw std::invalid_argument("phi_value: j must be 1 or 2");
    if (layer != 1 && layer != 2) throw std::invalid_argument("phi_value: layer must be 1 or 2");
    const Complex n = (layer == 1) ? slab.n1.value() : slab.n2.value();
    const Complex fwd = (layer == 1) ? (j == 1 ? ls.A1 : ls.A2) : (j == 1 ? ls.C1 : ls.C2);
    const Complex bwd = (layer == 1) ? (j == 1 ? ls.B1 : ls.B2) : (j == 1 ? ls.D1 : ls.D2);
    const Complex e = std::exp(iunit * k.K * n * x);
    return fwd * e + bwd / e;
}

inline Complex phi_derivative(const LayerSolution& ls, const BilayerSlab& slab,
                              Wavenumber k, int j, int layer, double x) {
    if (j != 1 && j != 2) throw std::invalid_argument("phi_derivative: j must be 1 or 2");
    if (layer != 1 && layer != 2) throw std::invalid_argument("phi_derivative: layer must be 1 or 2");
    const Complex n = (layer == 1) ? slab.n1.value() : slab.n2.value();
    const Complex fwd = (layer == 1) ? (j == 1 ? ls.A1 : ls.A2) : (j == 1 ? ls.C1 : ls.C2);
    const Complex bwd = (layer == 1) ? (j == 1 ? ls.B1 : ls.B2) : (j == 1 ? ls.D1 : ls.D2);
    const Complex e = std::exp(iunit * k.K * n * x);
    return iunit * k.K * n * (fwd * e - bwd / e);
}

struct GammaFactors {
    Complex g1_plus, g1_minus;  // Gamma_{1,+}, Gamma_{1,-}
    Complex g2_plus, g2_minus;
};

// Boundary functionals from the layer amplitudes (coefficient route).
inline GammaFactors gamma_factors(const BilayerSlab& slab, Wavenumber k) {
    const LayerSolution ls = layer_coefficients(slab, k);
    const Complex n2 = slab.n2.value();
    const double K = k.K;
    const Complex e2 = std::exp(iunit * K * n2);
    const Complex em2 = std::exp(-iunit * K * n2);

    const Complex v1 = ls.C1 * e2 + ls.D1 * em2;
    const Complex d1 = iunit * K * n2 * (ls.C1 * e2 - ls.D1 * em2);
    const Complex v2 = ls.C2 * e2 + ls.D2 * em2;
    const Complex d2 = iunit * K * n2 * (ls.C2 * e2 - ls.D2 * em2);

    GammaFactors g;
    g.g1_plus = d1 + iunit * K * v1;
    g.g1_minus = d1 - iunit * K * v1;
    g.g2_plus = d2 + iunit * K * v2;
    g.g2_minus = d2 - iunit * K * v2;
    return g;
}

namespace detail {

// shared trigonometric brackets of the closed forms:
//   S = n+ nt+ sin(a+) + n- nt- sin(a-),  C = n+^2 cos(a+) - n-^2 cos(a-)
struct TrigTerms {
    Complex S, C;
    Complex n1n2;
};

inline TrigTerms trig_terms(Complex n1, Complex n2, double K) {
    const Complex np = n1 + n2;
    const Complex nm = n1 - n2;
    const Complex tp = n1 * n2 + 1.0;
    const Complex tm = n1 * n2 - 1.0;
    const Complex ap = 0.5 * K * np;
    const Complex am = 0.5 * K * nm;
    TrigTerms t;
    t.S = np * tp * std::sin(ap) + nm * tm * std::sin(am);
    t.C = np * np * std::cos(ap) - nm * nm * std::cos(am);
    t.n1n2 = n1 * n2;
    return t;
}

inline Complex gamma_ss_closed_raw(Complex n1, Complex n2, double K) {
    const TrigTerms t = trig_terms(n1, n2, K);
    return -K / (2.0 * t.n1n2) * (t.S + iunit * t.C);
}

inline Complex gamma_cpa_closed_raw(Complex n1, Complex n2, double K) {
    const TrigTerms t = trig_terms(n1, n2, K);
    return K / (2.0 * t.n1n2) * (t.S - iunit * t.C);
}

}  // namespace detail

// Gamma_{1,-} in closed form; its zeros on the real-K axis are the spectral
// singularities (M22 = 0).
inline Complex gamma_ss_closed(const BilayerSlab& slab, Wavenumber k) {
    return detail::gamma_ss_closed_raw(slab.n1.value(), slab.n2.value(), k.K);
}

// Gamma_{1,+} - 2 Gamma_{2,+} in closed form; zeros are CPA points (M11 = 0).
inline Complex gamma_cpa_closed(const BilayerSlab& slab, Wavenumber k) {
    return detail::gamma_cpa_closed_raw(slab.n1.value(), slab.n2.value(), k.K);
}

struct TransferMatrix {
    Complex m11, m12, m21, m22;

    Complex det() const { return m11 * m22 - m12 * m21; }
    double max_abs() const {
        return std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    }
};

// z-centered frame
inline TransferMatrix transfer_matrix(const BilayerSlab& slab, Wavenumber k) {
    const GammaFactors g = gamma_factors(slab, k);
    const double K = k.K;
    const Complex pref = 1.0 / (2.0 * iunit * K);
    const Complex eK = std::exp(iunit * K);
    const Complex emK = std::exp(-iunit * K);
    TransferMatrix m;
    m.m11 = -emK * (g.g1_plus - 2.0 * g.g2_plus) * pref;
    m.m12 = g.g1_plus * pref;
    m.m21 = (g.g1_minus - 2.0 * g.g2_minus) * pref;
    m.m22 = -eK * g.g1_minus * pref;
    return m;
}

}  // namespace cpalaser
