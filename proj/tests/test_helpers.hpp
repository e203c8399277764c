#pragma once

#include <random>

#include "cpalaser/reference_table.hpp"
#include "cpalaser/types.hpp"

// seeded draws over the physical parameter ranges used by the property tests,
// plus the refined reference roots shared by the benchmark-anchored tests

namespace testing_support {

// seed -> refine for reference row `i` (0-based), cached
inline const cpalaser::SelfDualSolution& refined_row(int i) {
    static const auto rows = [] {
        std::array<cpalaser::SelfDualSolution, 3> out;
        const auto cases = cpalaser::reference_cases();
        for (size_t r = 0; r < cases.size(); ++r) {
            const auto seeds = cpalaser::generate_seeds(cases[r].eta1, cases[r].eta2,
                                                        cpalaser::reference_K);
            for (const auto& s : seeds) {
                if (s.kappa1 > 0.0) {
                    const auto outcome = cpalaser::refine(s);
                    if (!outcome.converged())
                        throw std::runtime_error("reference row failed to refine");
                    out[r] = outcome.solution;
                    break;
                }
            }
        }
        return out;
    }();
    return rows.at(i);
}

struct SlabSource {
    std::mt19937 rng;
    std::uniform_real_distribution<double> eta{1.0, 5.0};
    std::uniform_real_distribution<double> kappa{-1e-2, 1e-2};
    std::uniform_real_distribution<double> K{1.0, 2000.0};

    explicit SlabSource(unsigned seed) : rng(seed) {}

    cpalaser::BilayerSlab slab() {
        return cpalaser::BilayerSlab{cpalaser::ComplexIndex{eta(rng), kappa(rng)},
                                     cpalaser::ComplexIndex{eta(rng), kappa(rng)},
                                     {}};
    }

    cpalaser::BilayerSlab pt_slab() {
        const double e = eta(rng);
        const double q = kappa(rng);
        return cpalaser::BilayerSlab{cpalaser::ComplexIndex{e, q},
                                     cpalaser::ComplexIndex{e, -q},
                                     {}};
    }

    cpalaser::Wavenumber wavenumber() { return cpalaser::Wavenumber{K(rng)}; }
};

}  // namespace testing_support
