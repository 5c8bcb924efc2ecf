#include "lieobstruct/lie_algebra.hpp"

#include <array>
#include <string>

namespace lieobstruct {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_length(std::span<const std::uint64_t> v, std::size_t n) {
  if (v.size() != n) {
    throw InputError("coordinate vector has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(n));
  }
}

}  // namespace

BracketAlgebra::BracketAlgebra(RingSpec ring, std::size_t n, std::vector<std::uint64_t> constants)
    : ring_(ring), n_(n), c_(std::move(constants)) {
  if (c_.size() != n_ * n_ * n_) {
    throw InputError("structure tensor has " + std::to_string(c_.size()) + " entries, expected " +
                     std::to_string(n_ * n_ * n_));
  }
  for (auto x : c_) {
    if (!ring_.is_canonical(x)) {
      throw InputError("structure constant " + std::to_string(x) + " is not canonical in " + ring_.name());
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      for (std::size_t m = 0; m < n_; ++m) {
        const bool ok = i == j ? constant(i, i, m) == 0 : constant(i, j, m) == ring_.neg(constant(j, i, m));
        if (!ok) throw InputError("not alternating at " + pair_str(i, j));
      }
    }
  }
}

BracketAlgebra BracketAlgebra::zero(RingSpec ring, std::size_t n) {
  return {ring, n, std::vector<std::uint64_t>(n * n * n, 0)};
}

Coords BracketAlgebra::bracket(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) const {
  check_length(x, n_);
  check_length(y, n_);
  Coords out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const std::uint64_t coef = ring_.mul(x[i], y[j]);
      const auto b = basis_bracket(i, j);
      for (std::size_t m = 0; m < n_; ++m) {
        if (b[m] != 0) out[m] = ring_.add(out[m], ring_.mul(coef, b[m]));
      }
    }
  }
  return out;
}

Coords BracketAlgebra::bracket_with_basis(std::span<const std::uint64_t> v, std::size_t j) const {
  check_length(v, n_);
  Coords out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    const auto b = basis_bracket(i, j);
    for (std::size_t m = 0; m < n_; ++m) {
      if (b[m] != 0) out[m] = ring_.add(out[m], ring_.mul(v[i], b[m]));
    }
  }
  return out;
}

Coords BracketAlgebra::jacobiator(std::size_t i, std::size_t j, std::size_t l) const {
  Coords out(n_, 0);
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, l}, {j, l, i}, {l, i, j}}};
  for (const auto& [a, b, c] : cyc) {
    const auto t = bracket_with_basis(basis_bracket(a, b), c);
    for (std::size_t m = 0; m < n_; ++m) out[m] = ring_.add(out[m], t[m]);
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> BracketAlgebra::jacobi_failure() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t l = j + 1; l < n_; ++l) {
        for (auto x : jacobiator(i, j, l)) {
          if (x != 0) return std::array<std::size_t, 3>{i, j, l};
        }
      }
    }
  }
  return std::nullopt;
}

LieAlgebra::LieAlgebra(BracketAlgebra algebra) : algebra_(std::move(algebra)) {
  if (const auto bad = algebra_.jacobi_failure()) {
    throw InputError("Jacobi identity fails on basis triple (" + std::to_string((*bad)[0]) + "," +
                     std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
  }
}

std::variant<LieAlgebra, BracketAlgebra> validate(RingSpec ring, std::size_t n,
                                                  std::vector<std::uint64_t> constants) {
  BracketAlgebra b(ring, n, std::move(constants));
  if (b.satisfies_jacobi()) return LieAlgebra(std::move(b));
  return b;
}

BracketAlgebra reduce_algebra(const BracketAlgebra& algebra) {
  const RingSpec& ring = algebra.ring();
  if (ring.level() < 2) throw InputError("cannot reduce below residue field");
  const unsigned k = ring.level() - 1;
  std::vector<std::uint64_t> c(algebra.constants());
  for (auto& x : c) x = ring.truncate(x, k);
  return {ring.at_level(k), algebra.dim(), std::move(c)};
}

LieAlgebra reduce_algebra(const LieAlgebra& algebra) {
  return LieAlgebra(reduce_algebra(algebra.as_bracket_algebra()));
}

LieAlgebra reduce_to_residue(const LieAlgebra& algebra) {
  const RingSpec& ring = algebra.ring();
  if (ring.is_field()) return algebra;
  std::vector<std::uint64_t> c(algebra.constants());
  for (auto& x : c) x %= ring.prime();
  return LieAlgebra(ring.residue(), algebra.dim(), std::move(c));
}

LieAlgebra from_integer_constants(RingSpec ring, std::size_t n, std::span<const std::int64_t> ints) {
  std::vector<std::uint64_t> c(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) c[i] = ring.from_int(ints[i]);
  return LieAlgebra(ring, n, std::move(c));
}

Coords basis_vector(std::size_t n, std::size_t i) {
  Coords v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace lieobstruct
