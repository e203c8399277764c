#include <catch2/catch.hpp>

#include "cpalaser/bilayer.hpp"
#include "cpalaser/interface_product.hpp"
#include "cpalaser/solver.hpp"
#include "test_helpers.hpp"

using namespace cpalaser;
using testing_support::SlabSource;
using testing_support::refined_row;

namespace {

double entry_gap(const TransferMatrix& a, const TransferMatrix& b) {
    const double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
    return std::max(std::max(std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12)),
                    std::max(std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22))) /
           scale;
}

// textbook single-slab matrix in the slab-centered frame, used as an
// implementation-independent check for the uniform limit
TransferMatrix uniform_slab_reference(double n, double K) {
    const double half = (n * n + 1.0) / (2.0 * n);
    const double off = (n * n - 1.0) / (2.0 * n);
    const Complex c = std::cos(n * K), s = std::sin(n * K);
    TransferMatrix m;
    m.m11 = std::exp(-iunit * K) * (c + iunit * half * s);
    m.m22 = std::exp(iunit * K) * (c - iunit * half * s);
    m.m12 = iunit * off * s;
    m.m21 = -iunit * off * s;
    return m;
}

}  // namespace

TEST_CASE("domain types validate their invariants") {
    CHECK_THROWS_AS(ComplexIndex(-0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(ComplexIndex(std::numeric_limits<double>::quiet_NaN(), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(Wavenumber(0.0), std::domain_error);
    CHECK_THROWS_AS(Wavenumber(-3.0), std::domain_error);

    CHECK(ComplexIndex(1.5, -1e-3).physical());
    CHECK_FALSE(ComplexIndex(0.5, 0.0).physical());
    CHECK_FALSE(ComplexIndex(1.5, 0.5).physical());

    const Wavenumber k{400.0 * pi};
    CHECK(k.lambda_over_L() == Approx(1.0 / 200.0).epsilon(1e-14));

    const BilayerSlab pt{ComplexIndex{1.5, 1e-3}, ComplexIndex{1.5, -1e-3}, {}};
    CHECK(pt.is_pt());
    CHECK_FALSE(BilayerSlab{ComplexIndex{3.6, 0}, ComplexIndex{1.5, 0}, {}}.is_pt());
}

TEST_CASE("layer coefficients: free-space reduction") {
    const BilayerSlab fs{ComplexIndex{1, 0}, ComplexIndex{1, 0}, {}};
    for (double K : {0.7, 5.0, 400.0}) {
        const Wavenumber kw{K};
        const LayerSolution ls = layer_coefficients(fs, kw);
        CHECK(std::abs(ls.A1) < 1e-15);
        CHECK(std::abs(ls.B1 - 1.0) < 1e-15);
        CHECK(std::abs(ls.A2 - 0.5) < 1e-15);
        CHECK(std::abs(ls.B2 - 0.5) < 1e-15);
        const Complex a1 = 0.5 * K, a2 = 0.5 * K;
        const Complex want_c2 =
            0.5 * std::exp(-iunit * a2) * (std::cos(a1) + iunit * std::sin(a1));
        CHECK(std::abs(ls.C2 - want_c2) < 1e-14);
        // phi_1 keeps running as the plane wave e^{-iKx}
        CHECK(std::abs(phi_value(ls, fs, kw, 1, 2, 0.8) - std::exp(-iunit * K * 0.8)) <
              1e-13);
    }
}

TEST_CASE("layer coefficients: zero index is rejected") {
    const BilayerSlab bad{ComplexIndex{0.0, 0.0}, ComplexIndex{1.5, 0.0}, {}};
    CHECK_THROWS_AS(layer_coefficients(bad, Wavenumber{1.0}), std::domain_error);
}

TEST_CASE("phi and phi' are continuous across the interface") {
    SlabSource src(20240601);
    for (int i = 0; i < 200; ++i) {
        const BilayerSlab slab = src.slab();
        const Wavenumber k = src.wavenumber();
        const LayerSolution ls = layer_coefficients(slab, k);
        CHECK(ls.A2 == Complex{0.5, 0.0});  // exact for every slab
        CHECK(ls.B2 == Complex{0.5, 0.0});
        for (int j : {1, 2}) {
            const Complex v1 = phi_value(ls, slab, k, j, 1, 0.5);
            const Complex v2 = phi_value(ls, slab, k, j, 2, 0.5);
            const Complex d1 = phi_derivative(ls, slab, k, j, 1, 0.5);
            const Complex d2 = phi_derivative(ls, slab, k, j, 2, 0.5);
            CHECK(std::abs(v1 - v2) <= 1e-12 * std::max(1.0, std::abs(v1)));
            CHECK(std::abs(d1 - d2) <= 1e-12 * std::max(1.0, std::abs(d1)));
        }
        // initial conditions at x = 0
        CHECK(std::abs(phi_value(ls, slab, k, 1, 1, 0.0) - 1.0) < 1e-13);
        CHECK(std::abs(phi_derivative(ls, slab, k, 1, 1, 0.0) + iunit * k.K) <
              1e-13 * k.K);
        CHECK(std::abs(phi_value(ls, slab, k, 2, 1, 0.0) - 1.0) < 1e-13);
        CHECK(std::abs(phi_derivative(ls, slab, k, 2, 1, 0.0)) < 1e-13 * k.K);
    }
}

TEST_CASE("gamma factors: coefficient route matches the closed forms") {
    SlabSource src(707);
    for (int i = 0; i < 500; ++i) {
        const BilayerSlab slab = src.slab();
        const Wavenumber k = src.wavenumber();
        const GammaFactors g = gamma_factors(slab, k);
        const Complex ss = gamma_ss_closed(slab, k);
        const Complex cpa = gamma_cpa_closed(slab, k);
        const Complex combo = g.g1_plus - 2.0 * g.g2_plus;
        CHECK(std::abs(g.g1_minus - ss) <=
              1e-10 * std::max(std::abs(ss), std::abs(g.g1_minus)));
        CHECK(std::abs(combo - cpa) <= 1e-10 * std::max(std::abs(cpa), std::abs(combo)));
    }
}

TEST_CASE("gamma factors: PT slabs tie the two root functions together") {
    SlabSource src(90125);
    for (int i = 0; i < 200; ++i) {
        const BilayerSlab slab = src.pt_slab();
        const Wavenumber k = src.wavenumber();
        const GammaFactors g = gamma_factors(slab, k);
        const Complex combo = g.g1_plus - 2.0 * g.g2_plus;
        CHECK(std::abs(combo + std::conj(g.g1_minus)) <=
              1e-10 * std::max(1.0, std::abs(g.g1_minus)));
    }
}

TEST_CASE("gamma factors: free space gives the identity matrix downstream") {
    const BilayerSlab fs{ComplexIndex{1, 0}, ComplexIndex{1, 0}, {}};
    const Wavenumber k{7.3};
    const TransferMatrix m = transfer_matrix(fs, k);
    CHECK(std::abs(m.m11 - 1.0) < 1e-14);
    CHECK(std::abs(m.m22 - 1.0) < 1e-14);
    CHECK(std::abs(m.m12) < 1e-14);
    CHECK(std::abs(m.m21) < 1e-14);
}

TEST_CASE("gamma factors: refined benchmark root zeroes both combinations") {
    const SelfDualSolution& sol = refined_row(0);
    const Wavenumber kw{sol.K};
    const GammaFactors g = gamma_factors(sol.slab(), kw);
    CHECK(std::abs(g.g1_minus) / kw.K < 1e-6);
    CHECK(std::abs(g.g1_plus - 2.0 * g.g2_plus) / kw.K < 1e-6);
}

TEST_CASE("transfer matrix: uniform real slab reduces to the textbook form") {
    for (double n : {1.5, 2.25, 3.6}) {
        for (double K : {0.9, 10.0, 321.5}) {
            const BilayerSlab slab{ComplexIndex{n, 0}, ComplexIndex{n, 0}, {}};
            const TransferMatrix got = transfer_matrix(slab, Wavenumber{K});
            const TransferMatrix want = uniform_slab_reference(n, K);
            CHECK(entry_gap(got, want) < 1e-12);
        }
    }
}

TEST_CASE("transfer matrix: interface-product route agrees entrywise") {
    SlabSource src(5150);
    for (int i = 0; i < 1000; ++i) {
        const BilayerSlab slab = src.slab();
        const Wavenumber k = src.wavenumber();
        const TransferMatrix a = transfer_matrix(slab, k);
        const TransferMatrix b = transfer_matrix_interface_product(slab, k);
        CHECK(entry_gap(a, b) < 1e-10);
    }
}

TEST_CASE("transfer matrix: unit determinant over random physical slabs") {
    SlabSource src(31415);
    for (int i = 0; i < 1000; ++i) {
        const TransferMatrix m = transfer_matrix(src.slab(), src.wavenumber());
        // relative to the product scale: strongly amplifying slabs have entries
        // ~e^{|Im a|}, and det is a difference of entry products
        const double scale = std::max(1.0, m.max_abs() * m.max_abs());
        CHECK(std::abs(m.det() - 1.0) < 1e-10 * scale);
    }
}

TEST_CASE("transfer matrix: benchmark root has vanishing diagonal") {
    const SelfDualSolution& sol = refined_row(1);
    const TransferMatrix m = transfer_matrix(sol.slab(), Wavenumber{sol.K});
    const double off = std::max(std::abs(m.m12), std::abs(m.m21));
    CHECK(std::abs(m.m11) < 1e-6 * off);
    CHECK(std::abs(m.m22) < 1e-6 * off);
}

TEST_CASE("transfer matrix: conjugating the slab swaps the diagonal roles") {
    SlabSource src(271828);
    for (int i = 0; i < 300; ++i) {
        const BilayerSlab slab = src.slab();
        const Wavenumber k = src.wavenumber();
        const TransferMatrix a = transfer_matrix(slab, k);
        const TransferMatrix b = transfer_matrix(slab.conjugated(), k);
        CHECK(std::abs(std::abs(b.m22) - std::abs(a.m11)) <=
              1e-10 * std::max(1.0, std::abs(a.m11)));
        CHECK(std::abs(std::abs(b.m11) - std::abs(a.m22)) <=
              1e-10 * std::max(1.0, std::abs(a.m22)));
    }
}
