#pragma once

// Structure-constant algebras over R_k.
//
// A rank-n algebra is stored as the tensor c[i][j][m] of canonical ring
// representatives with [e_i, e_j] = sum_m c[i][j][m] e_m, flattened as
// (i * n + j) * n + m. Coordinate vectors are std::vector<uint64_t> of
// canonical representatives over the algebra's ring.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lieobstruct/ring.hpp"

namespace lieobstruct {

using Coords = std::vector<std::uint64_t>;

/// Alternating bilinear bracket on a free R_k-module; Jacobi not required.
class BracketAlgebra {
 public:
  /// Throws InputError("not alternating at (i,j)") or on shape/canonicity errors.
  BracketAlgebra(RingSpec ring, std::size_t n, std::vector<std::uint64_t> constants);

  /// Zero bracket of rank n.
  static BracketAlgebra zero(RingSpec ring, std::size_t n);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<std::uint64_t>& constants() const noexcept { return c_; }

  std::uint64_t constant(std::size_t i, std::size_t j, std::size_t m) const {
    return c_[(i * n_ + j) * n_ + m];
  }
  /// Coordinates of [e_i, e_j].
  std::span<const std::uint64_t> basis_bracket(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * n_ + j) * n_, n_};
  }

  Coords bracket(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) const;
  /// [v, e_j]
  Coords bracket_with_basis(std::span<const std::uint64_t> v, std::size_t j) const;

  /// [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j]
  Coords jacobiator(std::size_t i, std::size_t j, std::size_t l) const;
  /// First basis triple i < j < l with a nonzero Jacobiator, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_failure() const;
  bool satisfies_jacobi() const { return !jacobi_failure().has_value(); }

  friend bool operator==(const BracketAlgebra&, const BracketAlgebra&) = default;

 private:
  RingSpec ring_;
  std::size_t n_;
  std::vector<std::uint64_t> c_;
};

/// A bracket algebra that satisfies the Jacobi identity on all basis triples.
class LieAlgebra {
 public:
  /// Throws InputError when the Jacobi identity fails.
  explicit LieAlgebra(BracketAlgebra algebra);
  LieAlgebra(RingSpec ring, std::size_t n, std::vector<std::uint64_t> constants)
      : LieAlgebra(BracketAlgebra(ring, n, std::move(constants))) {}

  const BracketAlgebra& as_bracket_algebra() const noexcept { return algebra_; }
  const RingSpec& ring() const noexcept { return algebra_.ring(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const std::vector<std::uint64_t>& constants() const noexcept { return algebra_.constants(); }
  std::uint64_t constant(std::size_t i, std::size_t j, std::size_t m) const {
    return algebra_.constant(i, j, m);
  }
  std::span<const std::uint64_t> basis_bracket(std::size_t i, std::size_t j) const {
    return algebra_.basis_bracket(i, j);
  }
  Coords bracket(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) const {
    return algebra_.bracket(x, y);
  }
  Coords bracket_with_basis(std::span<const std::uint64_t> v, std::size_t j) const {
    return algebra_.bracket_with_basis(v, j);
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  BracketAlgebra algebra_;
};

/// Classifies a tensor as a Lie algebra (alternating + Jacobi) or a bracket
/// algebra (alternating only). Non-alternating tensors throw InputError.
std::variant<LieAlgebra, BracketAlgebra> validate(RingSpec ring, std::size_t n,
                                                  std::vector<std::uint64_t> constants);

/// Entrywise reduction R_{k+1} -> R_k. Throws at level 1.
BracketAlgebra reduce_algebra(const BracketAlgebra& algebra);
LieAlgebra reduce_algebra(const LieAlgebra& algebra);

/// Entrywise reduction to the residue field; identity at level 1.
LieAlgebra reduce_to_residue(const LieAlgebra& algebra);

/// Structure constants from integers: c[i][j][m] = image of ints[(i*n+j)*n+m].
LieAlgebra from_integer_constants(RingSpec ring, std::size_t n, std::span<const std::int64_t> ints);

/// Unit coordinate vector e_i.
Coords basis_vector(std::size_t n, std::size_t i);

}  // namespace lieobstruct
