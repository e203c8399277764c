#pragma once

// Umbrella header: scattering off a two-layer gain/loss slab, spectral
// singularities and their time-reversed duals, and the seeded Newton solver
// for self-dual (CPA-laser) operating points.

#include "types.hpp"          // IWYU pragma: export
#include "bilayer.hpp"        // IWYU pragma: export
#include "interface_product.hpp"  // IWYU pragma: export
#include "scattering.hpp"     // IWYU pragma: export
#include "residuals.hpp"      // IWYU pragma: export
#include "reduced.hpp"        // IWYU pragma: export
#include "seeds.hpp"          // IWYU pragma: export
#include "solver.hpp"         // IWYU pragma: export
#include "dof.hpp"            // IWYU pragma: export
#include "reference_table.hpp"  // IWYU pragma: export
#include "io.hpp"             // IWYU pragma: export
