#pragma once

// Named algebras built from integer structure constants.
//
//   abelian(n)               zero bracket
//   heisenberg(n), n odd     [e_i, e_{m+i}] = e_{2m}, n = 2m + 1 (default 3)
//   sl(n)                    trace-zero n x n matrices; basis E_ij (i != j)
//                            row-major, then E_ii - E_{i+1,i+1}
//   psl(n)                   sl(n) / center over F_p, requires p | n, level 1
//   nilpotent-triangular(n)  strictly upper triangular matrices, E_ij (i < j)

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

struct CatalogName {
  std::string base;  // abelian, heisenberg, sl, psl, nilpotent-triangular
  std::size_t n = 0;
};

/// Accepts "sl" with an explicit n, or the inline form "sl(3)". An inline
/// size wins over n_hint when both are given and agree; disagreement throws.
CatalogName parse_catalog_name(std::string_view name, std::size_t n_hint);

/// The integer structure tensor, or an empty vector for psl.
std::vector<std::int64_t> catalog_integer_constants(const CatalogName& name);

/// Rank of the integer-constant catalog entry.
std::size_t catalog_rank(const CatalogName& name);

LieAlgebra catalog(const CatalogName& name, const RingSpec& ring);
LieAlgebra catalog(std::string_view name, std::size_t n, const RingSpec& ring);

/// Names whose structure constants are integers (lift canonically).
const std::vector<std::string>& integer_catalog_names();

}  // namespace lieobstruct
