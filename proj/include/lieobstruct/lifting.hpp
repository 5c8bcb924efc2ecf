#pragma once

// Lifting a Lie algebra L over R_k to R_{k+1}.
//
// A bracket lift is any alternating bracket on the free R_{k+1}-module B
// reducing to L. Its Jacobiator takes values in pi^k B, so dividing by
// pi^k gives an F_p-valued alternating 3-form J on the residue algebra.
// J is a cocycle; its class vanishes exactly when some bracket lift is a
// Lie algebra. Changing the lift by psi(<.,.>) shifts J by -d<.,.>, so a
// witness with d<.,.> = J turns the canonical lift into a Lie algebra.
// Lifts up to identity-inducing isomorphisms Id + psi o phi o lambda are
// indexed by H^2(L_bar, ad).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lieobstruct/ce_complex.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

struct BracketLift {
  LieAlgebra base;         // over R_k
  BracketAlgebra lifted;   // over R_{k+1}, reduces to base
};

/// Representatives of the base constants reinterpreted in R_{k+1}.
BracketLift make_bracket_lift(const LieAlgebra& base);

/// [x, y]' = [x, y] + psi(t(lambda x, lambda y)); t is an adjoint 2-form on the residue algebra.
BracketLift perturb_lift(const BracketLift& lift, const AdForm& t);

/// The 2-form t with to = from + psi(t o lambda); both brackets must agree modulo pi^k.
AdForm correction_form(const BracketAlgebra& from, const BracketAlgebra& to);

/// chi of the Jacobiator on basis triples, as an adjoint 3-form on the residue
/// algebra. Throws InvariantViolation if the Jacobiator is not divisible by
/// pi^k or if dJ != 0.
AdForm jacobiator(const BracketLift& lift);

struct ObstructionReport {
  LieAlgebra residue;                       // L_bar
  AdForm cocycle;                           // J of the canonical lift
  bool closed = true;                       // dJ = 0, checked
  std::optional<AdForm> witness;            // <.,.> with d<.,.> = J
  std::optional<LieAlgebra> lifted;         // canonical lift corrected by the witness
  std::optional<FpVector> class_coordinates;  // [J] in the H^3 representative basis, when obstructed
  bool lifts() const noexcept { return lifted.has_value(); }
};

ObstructionReport obstruction(const LieAlgebra& algebra);

/// Dimension of the affine space {t : dt = J(lift)} (the corrections making
/// the lift a Lie algebra), or nullopt when it is empty.
std::optional<std::size_t> correction_space_dimension(const BracketLift& lift);

inline constexpr std::uint64_t kLiftFamilyBound = 100'000;

struct LiftFamily {
  LieAlgebra base_lift;
  std::vector<AdForm> h2_basis;
  std::size_t h2_dim = 0;
  /// p^h2_dim, saturated at UINT64_MAX.
  std::uint64_t member_count = 0;
  bool materialized = false;
  /// H^2 coordinates (lexicographic, last coordinate fastest) and the lift.
  std::vector<std::pair<FpVector, LieAlgebra>> members;
};

/// nullopt when the algebra is obstructed. Members are materialized when
/// p^dim H^2 <= kLiftFamilyBound.
std::optional<LiftFamily> lift_family(const LieAlgebra& algebra);

/// R_{k+1}-linear endomorphism of the free module, column j = image of e_j.
class ModuleMap {
 public:
  ModuleMap(RingSpec ring, std::size_t n, std::vector<std::uint64_t> columns);
  static ModuleMap identity(RingSpec ring, std::size_t n);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return n_; }
  std::uint64_t entry(std::size_t row, std::size_t col) const { return m_[col * n_ + row]; }

  Coords apply(std::span<const std::uint64_t> x) const;
  ModuleMap compose(const ModuleMap& inner) const;  // this o inner

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;

 private:
  RingSpec ring_;
  std::size_t n_;
  std::vector<std::uint64_t> m_;
};

/// Id + psi o phi o lambda on R_{k+1}^n for an adjoint 1-form phi (level >= 2).
ModuleMap psi_automorphism(const RingSpec& ring, const AdForm& phi);
/// Id - psi o phi o lambda, the inverse of psi_automorphism.
ModuleMap psi_automorphism_inverse(const RingSpec& ring, const AdForm& phi);

/// For two Lie algebra lifts of the same algebra over R_k, the 1-form phi
/// with <.,.>_2 - <.,.>_1 = -d phi, or nullopt when none exists. A returned
/// phi is checked: [Psi x, Psi y]_2 = Psi [x, y]_1 on all basis pairs.
/// Throws InputError("lifts of different bases") when the reductions differ.
std::optional<AdForm> lifts_equivalent(const LieAlgebra& first, const LieAlgebra& second);

struct TowerStep {
  unsigned from_level = 0;
  AdForm cocycle;
  std::optional<AdForm> witness;
  std::optional<FpVector> class_coordinates;
};

struct TowerReport {
  unsigned target_level = 0;
  unsigned reached_level = 0;
  std::vector<TowerStep> steps;
  LieAlgebra top;  // the algebra at reached_level
  bool success() const noexcept { return reached_level == target_level; }
};

/// Base change of a residue algebra over F_p[x]/(x) to F_p[x]/(x^level)
/// along the section kappa (constants become constant coefficient lists).
LieAlgebra extend_by_section(const LieAlgebra& residue, unsigned level);

/// Lifts level by level using the pivot-order witness at each step.
TowerReport lift_tower(const LieAlgebra& residue, unsigned target_level);

}  // namespace lieobstruct
