#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

// Domain types for the bilayer CPA-laser model. The time convention is
// e^{-i omega t} everywhere, so kappa > 0 means loss and kappa < 0 means gain.

namespace cpalaser {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr Complex iunit{0.0, 1.0};

// Thrown when scattering amplitudes are requested at (or numerically on top of)
// a spectral singularity, where T, R^l, R^r diverge.
struct spectral_singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when the branch-seeded solver is asked for a configuration so close to
// eta1 = eta2 that its approximations break down; callers should switch to the
// dedicated PT path.
struct near_pt_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct ComplexIndex {
    double eta = 1.0;    // real part, dimensionless
    double kappa = 0.0;  // imaginary part; < 0 is gain under e^{-i omega t}

    ComplexIndex() = default;
    ComplexIndex(double eta_, double kappa_) : eta(eta_), kappa(kappa_) {
        if (!std::isfinite(eta) || !std::isfinite(kappa))
            throw std::domain_error("ComplexIndex: non-finite refractive index");
        if (eta < 0.0)
            throw std::domain_error("ComplexIndex: negative real part");
    }

    Complex value() const { return Complex{eta, kappa}; }
    ComplexIndex conjugated() const { return ComplexIndex{eta, -kappa}; }

    // realistic-material bound (1 <= eta < 5, |kappa| <= 1e-2); advisory only
    bool physical() const {
        return eta >= 1.0 && eta < 5.0 && std::abs(kappa) <= 1e-2;
    }
};

// Dimensionless wavenumber KK = L k, real and positive by definition (spectral
// singularities live on the real-KK axis).
struct Wavenumber {
    double K = 1.0;

    Wavenumber() = default;
    explicit Wavenumber(double K_) : K(K_) {
        if (!std::isfinite(K) || K <= 0.0)
            throw std::domain_error("Wavenumber: K must be finite and > 0");
    }

    double lambda_over_L() const { return 2.0 * pi / K; }
};

// Two layers of equal thickness L/2: index n1 on -L/2 <= z < 0, n2 on
// 0 <= z <= L/2, vacuum outside. The physical thickness is metadata only; all
// computations are in the dimensionless variables.
struct BilayerSlab {
    ComplexIndex n1;
    ComplexIndex n2;
    std::optional<double> thickness_um;

    Complex n_plus() const { return n1.value() + n2.value(); }
    Complex n_minus() const { return n1.value() - n2.value(); }
    Complex n_tilde_plus() const { return n1.value() * n2.value() + 1.0; }
    Complex n_tilde_minus() const { return n1.value() * n2.value() - 1.0; }

    double eta_plus() const { return n1.eta + n2.eta; }
    double eta_minus() const { return n1.eta - n2.eta; }
    double kappa_plus() const { return n1.kappa + n2.kappa; }
    double kappa_minus() const { return n1.kappa - n2.kappa; }

    BilayerSlab conjugated() const {
        return BilayerSlab{n1.conjugated(), n2.conjugated(), thickness_um};
    }

    // PT symmetry about the slab center means n1 = conj(n2)
    bool is_pt(double tol = 1e-10) const {
        return std::abs(n1.value() - std::conj(n2.value())) < tol;
    }

    bool physical() const { return n1.physical() && n2.physical(); }
};

}  // namespace cpalaser
