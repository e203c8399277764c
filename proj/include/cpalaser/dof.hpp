#pragma once

#include <stdexcept>

// Degrees-of-freedom counting for an n-coupling complex scattering potential
// constrained to carry a self-dual spectral singularity. PT symmetry makes the
// n couplings real and M22 = 0 (2 real constraints) suffices; without it both
// M11 = 0 and M22 = 0 must hold (4 real constraints on 2n+1 parameters).

namespace cpalaser {

// a family of potentials with n independent complex couplings, m of which
// multiply even basis functions; the basis itself is never evaluated here
struct PotentialFamily {
    int n = 1;
    int m = 0;

    PotentialFamily() = default;
    PotentialFamily(int n_, int m_) : n(n_), m(m_) {
        if (n < 1) throw std::domain_error("PotentialFamily: n must be >= 1");
        if (m < 0 || m > n)
            throw std::domain_error("PotentialFamily: m must satisfy 0 <= m <= n");
    }
};

struct DofBreakdown {
    int n = 0;
    bool pt_symmetric = false;
    int total_real_parameters = 0;  // couplings plus the wavenumber
    int constraints = 0;
    int dof = 0;                    // total - constraints - (PT reality conditions)
    bool overdetermined = false;    // dof < 0 (n = 1 without PT)
    bool non_pt_exceeds_pt = false; // 2n-3 > n-1, i.e. n > 2
};

inline DofBreakdown dof_breakdown(int n, bool pt_symmetric) {
    if (n < 1) throw std::domain_error("dof: n must be >= 1");
    DofBreakdown b;
    b.n = n;
    b.pt_symmetric = pt_symmetric;
    b.total_real_parameters = pt_symmetric ? n + 1 : 2 * n + 1;
    b.constraints = pt_symmetric ? 2 : 4;
    b.dof = b.total_real_parameters - b.constraints;  // n-1 or 2n-3
    b.overdetermined = b.dof < 0;
    b.non_pt_exceeds_pt = n > 2;
    return b;
}

inline DofBreakdown dof_breakdown(const PotentialFamily& family, bool pt_symmetric) {
    return dof_breakdown(family.n, pt_symmetric);
}

inline int dof(int n, bool pt_symmetric) { return dof_breakdown(n, pt_symmetric).dof; }

}  // namespace cpalaser
