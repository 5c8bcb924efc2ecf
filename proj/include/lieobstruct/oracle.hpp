#pragma once

// Exhaustive enumerators for tiny cases (n <= 3, p in {2,3}).
// Nothing here uses elimination or the cochain complex: tuples are
// enumerated and checked directly, so the results can referee the
// linear-algebra engine.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lieobstruct/ce_complex.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

struct OracleBudget {
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t max_maps = 1'000'000;
};

/// LIEOBSTRUCT_BUDGET, when set, overrides both limits.
OracleBudget budget_from_env(OracleBudget defaults = {});

/// Every Jacobi-satisfying bracket on R_{k+1}^n that reduces to L.
/// Throws GuardError when p^(n*C(n,2)) exceeds max_candidates.
std::vector<LieAlgebra> enumerate_lifts_bruteforce(const LieAlgebra& algebra, OracleBudget budget = {});

/// Classes of lifts (indices into the input, each class sorted, classes ordered
/// by first member) under Psi = Id + psi o phi o lambda, trying all p^(n^2) phi.
/// Throws InputError when the list is not closed under that action.
std::vector<std::vector<std::size_t>> partition_by_psi_equivalence(const std::vector<LieAlgebra>& lifts,
                                                                  OracleBudget budget = {});

/// dim H^s by counting cocycles and coboundaries one vector at a time.
std::size_t cohomology_bruteforce(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs,
                                  OracleBudget budget = {});

}  // namespace lieobstruct
