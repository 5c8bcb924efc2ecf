#pragma once

// The cochain complex Lambda^s(L, M) of a Lie algebra L over F_p with
// coefficients M = L (adjoint) or M = F_p (trivial), and its cohomology.
//
// Basis convention for Lambda^s(L, ad): (e_{i_1} ^ ... ^ e_{i_s})* (x) e_m
// with i_1 < ... < i_s, subsets in lexicographic order of the tuple and
// the coefficient index m fastest: coordinate = subset_index * n + m.
// Trivial coefficients drop m: coordinate = subset_index.
//
// The differential is
//   (d w)(x_0..x_s) = sum_i (-1)^i [x_i, w(.., ^x_i, ..)]
//                   + sum_{i<j} (-1)^{i+j} w([x_i, x_j], .., ^x_i, .., ^x_j, ..)
// where the first sum is absent for trivial coefficients.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieobstruct/fp_matrix.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

enum class Coefficients { Adjoint, Trivial };

std::string to_string(Coefficients coeffs);

/// Rank bound for the dense complex.
inline constexpr std::size_t kMaxComplexRank = 16;

std::size_t binomial(std::size_t n, std::size_t k);

/// dim Lambda^s: C(n, s) * n (adjoint) or C(n, s) (trivial); zero for s > n.
std::size_t cochain_dimension(std::size_t n, std::size_t s, Coefficients coeffs);

/// The size-s subsets of {0..n-1} in lexicographic order, as bitmasks.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t s);

  std::size_t size() const noexcept { return masks_.size(); }
  std::uint32_t mask(std::size_t idx) const { return masks_[idx]; }
  std::vector<std::size_t> members(std::size_t idx) const;
  /// Position of a mask with popcount s.
  std::size_t index_of(std::uint32_t mask) const { return lookup_[mask]; }

 private:
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint32_t> lookup_;
};

/// An alternating s-form on L with values in L (adjoint) or F_p (trivial).
class AdForm {
 public:
  AdForm(std::size_t rank, std::size_t degree, std::uint64_t p, Coefficients coeffs, FpVector coords);
  static AdForm zero(std::size_t rank, std::size_t degree, std::uint64_t p,
                     Coefficients coeffs = Coefficients::Adjoint);

  std::size_t rank() const noexcept { return n_; }
  std::size_t degree() const noexcept { return s_; }
  std::uint64_t prime() const noexcept { return p_; }
  Coefficients coefficients() const noexcept { return coeffs_; }
  const FpVector& coords() const noexcept { return coords_; }
  FpVector& coords() noexcept { return coords_; }
  bool is_zero() const;

  AdForm operator+(const AdForm& other) const;
  AdForm operator-(const AdForm& other) const;
  AdForm scaled(std::uint64_t c) const;

  friend bool operator==(const AdForm&, const AdForm&) = default;

 private:
  std::size_t n_;
  std::size_t s_;
  std::uint64_t p_;
  Coefficients coeffs_;
  FpVector coords_;
};

/// Matrix of d : Lambda^s -> Lambda^{s+1}, columns indexed by the domain basis.
/// Requires a level-1 algebra, n <= kMaxComplexRank and 0 <= s <= n.
FpMatrix differential_matrix(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs);

AdForm apply_differential(const LieAlgebra& algebra, const AdForm& form);

/// Alternating multilinear extension of the form evaluated at s vectors.
/// Returns n coordinates (adjoint) or one value (trivial).
FpVector evaluate_form(const AdForm& form, const std::vector<FpVector>& args);

struct DegreeCohomology {
  std::size_t degree = 0;
  std::uint64_t prime = 0;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;     // dim Z^s
  std::size_t coboundary_dim = 0;  // dim B^s
  std::size_t dim() const noexcept { return cocycle_dim - coboundary_dim; }
  /// Echelon basis of B^s.
  std::vector<FpVector> coboundary_basis;
  /// Cocycles reduced modulo B^s whose classes form a basis of H^s.
  std::vector<FpVector> representatives;
};

struct CohomologyReport {
  Coefficients coeffs = Coefficients::Adjoint;
  std::size_t rank = 0;
  std::uint64_t prime = 0;
  std::vector<DegreeCohomology> degrees;  // s = 0..n
  std::vector<std::size_t> dims() const;
};

struct CohomologyOptions {
  /// Degrees are processed on up to this many threads; results do not depend on it.
  unsigned threads = 1;
};

CohomologyReport cohomology(const LieAlgebra& algebra, Coefficients coeffs, CohomologyOptions options = {});

/// H^s alone; builds only d_{s-1} and d_s.
DegreeCohomology degree_cohomology(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs);

/// Coordinates of the class of a cocycle in the representative basis, or
/// nullopt when the vector is not a cocycle of this degree.
std::optional<FpVector> class_coordinates(const DegreeCohomology& h, std::span<const std::uint64_t> cocycle);

/// Some eta with d(eta) = form (free variables zero in pivot order), or nullopt.
std::optional<AdForm> is_coboundary(const LieAlgebra& algebra, const AdForm& form);

}  // namespace lieobstruct
