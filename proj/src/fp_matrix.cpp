#include "lieobstruct/fp_matrix.hpp"

#include <utility>

#include "lieobstruct/error.hpp"
#include "lieobstruct/fp_kernels.hpp"

namespace lieobstruct {

namespace {

using u128 = unsigned __int128;

std::size_t find_pivot_row(const FpMatrix& m, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col) != 0) return r;
  }
  return m.rows();
}

void swap_rows(FpMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvariantViolation("inverse_mod: zero has no inverse");
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows, std::size_t cols, std::uint64_t p) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
  }
  return m;
}

void FpMatrix::accumulate(std::size_t r, std::size_t c, std::uint64_t v) {
  auto& x = (*this)(r, c);
  x = static_cast<std::uint64_t>((static_cast<u128>(x) + v % p_) % p_);
}

bool FpMatrix::is_zero() const {
  for (auto x : data_) {
    if (x != 0) return false;
  }
  return true;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FpMatrix FpMatrix::permute_columns(std::span<const std::size_t> order) const {
  if (order.size() != cols_) throw InputError("permute_columns: order has wrong length");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, order[c]);
  }
  return out;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows() || a.prime() != b.prime()) throw InputError("multiply: shape mismatch");
  const auto& k = kernels::active_kernels();
  FpMatrix out(a.rows(), b.cols(), a.prime());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      if (a(r, i) != 0) k.axpy(out.row(r), b.row(i), a(r, i), a.prime());
    }
  }
  return out;
}

FpVector apply_matrix(const FpMatrix& a, std::span<const std::uint64_t> x) {
  if (x.size() != a.cols()) throw InputError("apply_matrix: vector length mismatch");
  FpVector out(a.rows(), 0);
  const std::uint64_t p = a.prime();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    u128 acc = 0;
    const auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      acc = (acc + static_cast<u128>(row[c]) * x[c]) % p;
    }
    out[r] = static_cast<std::uint64_t>(acc);
  }
  return out;
}

RowEchelon row_reduce(FpMatrix m) {
  const auto& k = kernels::active_kernels();
  const std::uint64_t p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t pr = find_pivot_row(m, r, c);
    if (pr == m.rows()) continue;
    swap_rows(m, r, pr);
    k.scale(m.row(r), inverse_mod(m(r, c), p), p);
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == r || m(other, c) == 0) continue;
      k.axpy(m.row(other), m.row(r), p - m(other, c), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).rank(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  const RowEchelon e = row_reduce(m);
  const std::uint64_t p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1 % p;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const std::uint64_t x = e.reduced(r, f);
      v[e.pivot_cols[r]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint64_t> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  FpMatrix aug(m.rows(), m.cols() + 1, m.prime());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r] % m.prime();
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.rank() > 0 && e.pivot_cols.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  return x;
}

std::uint64_t determinant(FpMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  const auto& k = kernels::active_kernels();
  const std::uint64_t p = m.prime();
  std::uint64_t det = 1 % p;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::size_t pr = find_pivot_row(m, c, c);
    if (pr == m.rows()) return 0;
    if (pr != c) {
      swap_rows(m, c, pr);
      det = det == 0 ? 0 : p - det;
    }
    det = mul_mod(det, m(c, c), p);
    const std::uint64_t inv = inverse_mod(m(c, c), p);
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      k.axpy(m.row(r), m.row(c), p - mul_mod(m(r, c), inv, p), p);
    }
  }
  return det;
}

FpVector IncrementalBasis::reduce(std::span<const std::uint64_t> v) const {
  if (v.size() != dim_) throw InputError("IncrementalBasis: vector length mismatch");
  const auto& k = kernels::active_kernels();
  FpVector out(v.begin(), v.end());
  for (auto& x : out) x %= p_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t f = out[pivots_[i]];
    if (f != 0) k.axpy(out, rows_[i], p_ - f, p_);
  }
  return out;
}

bool IncrementalBasis::insert(std::span<const std::uint64_t> v) {
  FpVector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && r[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  kernels::active_kernels().scale(r, inverse_mod(r[pivot], p_), p_);
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalBasis::contains(std::span<const std::uint64_t> v) const {
  const FpVector r = reduce(v);
  for (auto x : r) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace lieobstruct
