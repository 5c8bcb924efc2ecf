#pragma once

// Structural predicates for Lie algebras over the residue field F_p.
// Every function here rejects algebras above level 1.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lieobstruct/fp_matrix.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

/// ad(e_i) as an n x n matrix over F_p: entry (m, j) is the e_m coordinate of [e_i, e_j].
FpMatrix adjoint_matrix(const LieAlgebra& algebra, std::size_t i);

/// Basis of the center, kernel of the stacked adjoint maps.
std::vector<Coords> center(const LieAlgebra& algebra);

struct CenterQuotient {
  LieAlgebra quotient;
  /// Basis indices of the original algebra that span the chosen complement,
  /// in order; quotient basis vector r is the image of e_{complement[r]}.
  std::vector<std::size_t> complement;
};

/// L / Z(L) in the complement basis selected by greedy pivoting.
CenterQuotient quotient_by_center(const LieAlgebra& algebra);

bool is_perfect(const LieAlgebra& algebra);

/// Largest p^n the simplicity enumeration will visit.
inline constexpr std::uint64_t kSimplicityEnumerationBound = 10'000'000;

/// Nonabelian and every nonzero vector generates the whole algebra as an ideal.
/// One representative per projective line is checked. Throws GuardError past
/// kSimplicityEnumerationBound.
bool is_simple(const LieAlgebra& algebra);

/// Smallest ideal containing v.
std::vector<Coords> ideal_closure(const LieAlgebra& algebra, const Coords& v);

/// K(i, j) = trace(ad e_i o ad e_j).
FpMatrix killing_form(const LieAlgebra& algebra);
bool is_killing_zero(const LieAlgebra& algebra);

/// trace(ad e_i) == 0 for all i.
bool is_unimodular(const LieAlgebra& algebra);

inline constexpr std::size_t kInvariantFormMaxRank = 12;

struct SymmetricFormSpace {
  std::size_t dimension = 0;
  /// Basis vectors indexed by multisets a <= b <= c in lexicographic order.
  std::vector<FpVector> basis;
};

/// Linear system whose kernel is the space of invariant symmetric
/// trilinear forms: one row per (w, x <= y <= z), one column per multiset.
FpMatrix invariant_symmetric_3form_system(const LieAlgebra& algebra);

/// Throws GuardError when n exceeds kInvariantFormMaxRank.
SymmetricFormSpace invariant_symmetric_3forms(const LieAlgebra& algebra);

/// Column index of the multiset {a, b, c} (any order) among the C(n+2, 3) monomials.
std::size_t symmetric_index(std::size_t n, std::size_t a, std::size_t b, std::size_t c);

}  // namespace lieobstruct
