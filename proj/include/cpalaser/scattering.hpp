#pragma once

#include <utility>

#include "bilayer.hpp"

// Scattering amplitudes, S-matrix eigenvalues and PT-symmetry diagnostics.
//
// T = 1/M22, R^l = -M21/M22, R^r = M12/M22. The S-matrix [[T, R^r], [R^l, T]]
// has eigenvalues T +- sqrt(R^l R^r); a zero of one eigenvalue is a CPA point,
// a pole (M22 = 0) a spectral singularity. For a PT slab (n1 = conj(n2)) and
// real K the z-centered transfer matrix obeys
//
//     Re M12 = Re M21 = 0,      M11 = conj(M22),
//
// which forces the phase relations exp(2i(phi_{l,r} - phi_t)) = -1 and the
// generalized continuity relation |T|^2 + s |R^l R^r| = 1. The sign s is +-1
// and equals -exp(i(phi_l + phi_r - 2 phi_t)); a lossless slab has s = +1 and
// recovers |T|^2 + |R|^2 = 1.

namespace cpalaser {

struct ScatteringAmplitudes {
    Complex t, r_left, r_right;
    double phi_t = 0.0, phi_l = 0.0, phi_r = 0.0;  // principal arguments
};

inline ScatteringAmplitudes scattering(const TransferMatrix& m) {
    if (std::abs(m.m22) < 1e-30)
        throw spectral_singularity_error(
            "scattering: |M22| < 1e-30, amplitudes diverge (spectral singularity)");
    ScatteringAmplitudes s;
    s.t = 1.0 / m.m22;
    s.r_left = -m.m21 / m.m22;
    s.r_right = m.m12 / m.m22;
    s.phi_t = std::arg(s.t);
    s.phi_l = std::arg(s.r_left);
    s.phi_r = std::arg(s.r_right);
    return s;
}

// unit-determinant reconstruction; inverse of scattering()
inline TransferMatrix transfer_matrix_from_amplitudes(const ScatteringAmplitudes& s) {
    TransferMatrix m;
    m.m11 = s.t - s.r_left * s.r_right / s.t;
    m.m12 = s.r_right / s.t;
    m.m21 = -s.r_left / s.t;
    m.m22 = 1.0 / s.t;
    return m;
}

// eigenvalues of [[T, R^r], [R^l, T]], principal square root
inline std::pair<Complex, Complex> s_matrix_eigenvalues(const ScatteringAmplitudes& s) {
    const Complex root = std::sqrt(s.r_left * s.r_right);
    return {s.t + root, s.t - root};
}

struct PTReport {
    bool is_pt = false;
    double scale = 1.0;             // max(1, largest |M entry|); divides the residuals
    double re_m12_residual = 0.0;   // |Re M12| / scale
    double re_m21_residual = 0.0;
    double diag_residual = 0.0;     // |M11 - conj(M22)| / scale
    double phase_residual_left = 0.0;   // |arg(-exp(2i(phi_l - phi_t)))|
    double phase_residual_right = 0.0;
    int continuity_sign = +1;           // s in |T|^2 + s |R^l R^r| = 1
    double continuity_residual = 0.0;   // scaled by max(1, |T|^2, |R^l R^r|)
    Complex continuity_phase{1.0, 0.0};  // exp(i(phi_l + phi_r - 2 phi_t)) = -s for PT
};

inline PTReport pt_diagnostics(const BilayerSlab& slab, Wavenumber k,
                               double pt_tol = 1e-10) {
    const TransferMatrix m = transfer_matrix(slab, k);
    PTReport rep;
    rep.is_pt = slab.is_pt(pt_tol);
    rep.scale = std::max(1.0, m.max_abs());
    rep.re_m12_residual = std::abs(m.m12.real()) / rep.scale;
    rep.re_m21_residual = std::abs(m.m21.real()) / rep.scale;
    rep.diag_residual = std::abs(m.m11 - std::conj(m.m22)) / rep.scale;

    const ScatteringAmplitudes amp = scattering(m);

    // phase relations are undefined at reflection zeros; report 0 there
    const double ref_floor = 1e-12 * (1.0 + std::abs(amp.t));
    auto phase_residual = [&](Complex r) {
        if (std::abs(r) < ref_floor) return 0.0;
        const Complex z = r / amp.t;
        return std::abs(std::arg(-(z * z)));
    };
    rep.phase_residual_left = phase_residual(amp.r_left);
    rep.phase_residual_right = phase_residual(amp.r_right);

    const Complex q = amp.r_left * amp.r_right / (amp.t * amp.t);
    if (std::abs(q) > 0.0) {
        rep.continuity_phase = q / std::abs(q);
        rep.continuity_sign = (q.real() < 0.0) ? +1 : -1;
    }
    const double t2 = std::norm(amp.t);
    const double rr = std::abs(amp.r_left * amp.r_right);
    rep.continuity_residual =
        std::abs(t2 + rep.continuity_sign * rr - 1.0) / std::max({1.0, t2, rr});
    return rep;
}

}  // namespace cpalaser
