#pragma once

// Dense matrices over F_p and exact Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lieobstruct {

using FpVector = std::vector<std::uint64_t>;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);

  static FpMatrix identity(std::size_t n, std::uint64_t p);
  /// Rows taken from the given vectors (all of length cols).
  static FpMatrix from_rows(const std::vector<FpVector>& rows, std::size_t cols, std::uint64_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Adds v (mod p) into entry (r, c).
  void accumulate(std::size_t r, std::size_t c, std::uint64_t v);

  bool is_zero() const;
  FpMatrix transposed() const;
  /// Columns reordered: result column j is this column order[j].
  FpMatrix permute_columns(std::span<const std::size_t> order) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
FpVector apply_matrix(const FpMatrix& a, std::span<const std::uint64_t> x);

struct RowEchelon {
  FpMatrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, r < rank
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Reduced row echelon form. Pivots are taken left to right, first
/// nonzero row at or below the current position.
RowEchelon row_reduce(FpMatrix m);

std::size_t rank(const FpMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing order,
/// with a 1 at that free column.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Solution of m x = b with every free variable set to zero, or nullopt.
std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint64_t> b);

std::uint64_t determinant(FpMatrix m);

/// Echelon basis of a growing subspace of F_p^dim.
class IncrementalBasis {
 public:
  IncrementalBasis(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  /// Unique representative of v modulo the span: zero at every pivot.
  FpVector reduce(std::span<const std::uint64_t> v) const;
  /// Adds v; returns false when v already lies in the span.
  bool insert(std::span<const std::uint64_t> v);
  bool contains(std::span<const std::uint64_t> v) const;

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<FpVector>& rows() const noexcept { return rows_; }

 private:
  std::size_t dim_;
  std::uint64_t p_;
  std::vector<FpVector> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace lieobstruct
