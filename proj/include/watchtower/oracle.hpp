#ifndef WATCHTOWER_ORACLE_HPP
#define WATCHTOWER_ORACLE_HPP

#include "watchtower/mesh25d.hpp"
#include "watchtower/solver1d.hpp"

namespace watchtower {

// Sample counts per interval; both endpoints are always included (the
// canonical realizations pin vertices to interval tops).
struct GridSpec {
  unsigned samples_per_interval = 2; // must be >= 2
};

enum class OracleMode { Discrete, Continuous };

// Enumeration cap; the WATCHTOWER_BUDGET environment variable overrides
// the default of 10^6 realizations.
unsigned long long oracle_budget();

// Brute-force minimum over all grid realizations. Discrete: best vertex
// tower on each realization. Continuous: fixed-terrain watchtower of each
// realization. Throws BudgetExceeded.
Scalar oracle_1d(const ImpreciseTerrain1D& T, const GridSpec& g, OracleMode mode);

// Both modes from a single enumeration (they share the realization's
// visibility region).
struct Oracle1DResult {
  Scalar discrete;
  Scalar continuous;
};
Oracle1DResult oracle_1d_both(const ImpreciseTerrain1D& T, const GridSpec& g);

// True iff some grid realization is guarded from one of its own vertices.
bool oracle_2_5d_zero(const ImpreciseMesh2_5D& M, const GridSpec& g);

// Minimum over grid realizations and base vertices of the smallest
// multiple of epsilon whose tower guards everything (base pinned at its
// interval top).
Scalar oracle_2_5d_height(const ImpreciseMesh2_5D& M, const GridSpec& g,
                          const Scalar& epsilon);

} // namespace watchtower

#endif
