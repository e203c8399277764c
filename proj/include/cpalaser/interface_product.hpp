#pragma once

#include "bilayer.hpp"

// Independent construction of the slab transfer matrix as an ordered product of
// plane-wave matching steps at the three interfaces. No Gamma functionals are
// involved, so this route cross-checks transfer_matrix() entry by entry.

namespace cpalaser {

namespace detail {

struct Mat2 {
    Complex a, b, c, d;  // [[a, b], [c, d]]
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// W(n, theta) maps globally referenced (e^{ikz}, e^{-ikz})-style amplitudes of
// a medium with index n onto (psi, psi'/(ik)) at the point with phase
// theta = k z. Its determinant is -2n.
inline Mat2 wave_basis(Complex n, double theta) {
    const Complex e = std::exp(iunit * n * theta);
    const Complex f = std::exp(-iunit * n * theta);
    return Mat2{e, f, n * e, -n * f};
}

inline Mat2 wave_basis_inverse(Complex n, double theta) {
    const Complex e = std::exp(iunit * n * theta);
    const Complex f = std::exp(-iunit * n * theta);
    return Mat2{0.5 * f, 0.5 * f / n, 0.5 * e, -0.5 * e / n};
}

}  // namespace detail

inline TransferMatrix transfer_matrix_interface_product(const BilayerSlab& slab,
                                                        Wavenumber k) {
    const Complex n1 = slab.n1.value();
    const Complex n2 = slab.n2.value();
    if (std::abs(n1) < 1e-300 || std::abs(n2) < 1e-300)
        throw std::domain_error("transfer_matrix_interface_product: zero refractive index");

    using detail::mul;
    using detail::wave_basis;
    using detail::wave_basis_inverse;

    const double h = 0.5 * k.K;  // phase k z at the outer faces z = +-L/2

    // vacuum -> layer 1 at z = -L/2, layer 1 -> layer 2 at z = 0,
    // layer 2 -> vacuum at z = +L/2; amplitudes keep their global z reference,
    // which is exactly the z-centered frame of transfer_matrix().
    detail::Mat2 m = mul(wave_basis_inverse(Complex{1.0, 0.0}, h), wave_basis(n2, h));
    m = mul(m, mul(wave_basis_inverse(n2, 0.0), wave_basis(n1, 0.0)));
    m = mul(m, mul(wave_basis_inverse(n1, -h), wave_basis(Complex{1.0, 0.0}, -h)));

    return TransferMatrix{m.a, m.b, m.c, m.d};
}

}  // namespace cpalaser
