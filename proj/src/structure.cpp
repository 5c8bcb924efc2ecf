#include "lieobstruct/structure.hpp"

#include <string>

namespace lieobstruct {

namespace {

void require_field(const LieAlgebra& algebra, const char* what) {
  if (!algebra.ring().is_field()) throw InputError(std::string(what) + " computed over residue field only");
}

// Rows: one per (j, m); columns: one per i; entry c[i][j][m]. Kernel = center.
FpMatrix stacked_adjoint(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  FpMatrix m(n * n, n, algebra.ring().prime());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = algebra.constant(i, j, k);
    }
  }
  return m;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t n, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > bound / p) return bound + 1;
    r *= p;
  }
  return r;
}

}  // namespace

FpMatrix adjoint_matrix(const LieAlgebra& algebra, std::size_t i) {
  require_field(algebra, "adjoint matrix");
  const std::size_t n = algebra.dim();
  FpMatrix ad(n, n, algebra.ring().prime());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < n; ++m) ad(m, j) = algebra.constant(i, j, m);
  }
  return ad;
}

std::vector<Coords> center(const LieAlgebra& algebra) {
  require_field(algebra, "center");
  if (algebra.dim() == 0) return {};
  return kernel_basis(stacked_adjoint(algebra));
}

CenterQuotient quotient_by_center(const LieAlgebra& algebra) {
  require_field(algebra, "quotient by center");
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  const auto z = center(algebra);
  const RowEchelon e = row_reduce(FpMatrix::from_rows(z, n, p));

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) complement.push_back(i);
  }

  // Reduce modulo the center (zero at pivots), then read complement coordinates.
  auto project = [&](Coords v) {
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const std::uint64_t f = v[e.pivot_cols[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        v[c] = (v[c] + mul_mod(p - f, e.reduced(r, c), p)) % p;
      }
    }
    Coords out(complement.size());
    for (std::size_t a = 0; a < complement.size(); ++a) out[a] = v[complement[a]];
    return out;
  };

  const std::size_t q = complement.size();
  std::vector<std::uint64_t> c(q * q * q, 0);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const auto br = algebra.basis_bracket(complement[a], complement[b]);
      const Coords img = project(Coords(br.begin(), br.end()));
      for (std::size_t m = 0; m < q; ++m) c[(a * q + b) * q + m] = img[m];
    }
  }
  return {LieAlgebra(algebra.ring(), q, std::move(c)), std::move(complement)};
}

bool is_perfect(const LieAlgebra& algebra) {
  require_field(algebra, "perfectness");
  const std::size_t n = algebra.dim();
  std::vector<FpVector> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = algebra.basis_bracket(i, j);
      brackets.emplace_back(b.begin(), b.end());
    }
  }
  return rank(FpMatrix::from_rows(brackets, n, algebra.ring().prime())) == n;
}

std::vector<Coords> ideal_closure(const LieAlgebra& algebra, const Coords& v) {
  require_field(algebra, "ideal closure");
  const std::size_t n = algebra.dim();
  IncrementalBasis span(n, algebra.ring().prime());
  std::vector<Coords> queue;
  if (span.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && span.size() < n; ++head) {
    for (std::size_t j = 0; j < n; ++j) {
      Coords w = algebra.bracket_with_basis(queue[head], j);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.rows();
}

bool is_simple(const LieAlgebra& algebra) {
  require_field(algebra, "simplicity");
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  bool abelian = true;
  for (auto x : algebra.constants()) abelian = abelian && x == 0;
  if (abelian) return false;
  if (checked_power(p, n, kSimplicityEnumerationBound) > kSimplicityEnumerationBound) {
    throw GuardError("simplicity: p^n exceeds the enumeration bound " +
                     std::to_string(kSimplicityEnumerationBound));
  }
  // Projective representatives: first nonzero coordinate equal to 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    const std::uint64_t count = checked_power(p, tail, kSimplicityEnumerationBound);
    Coords v(n, 0);
    v[lead] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t t = 0; t < tail; ++t) {
        v[lead + 1 + t] = x % p;
        x /= p;
      }
      if (ideal_closure(algebra, v).size() < n) return false;
    }
  }
  return true;
}

FpMatrix killing_form(const LieAlgebra& algebra) {
  require_field(algebra, "Killing form");
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  FpMatrix k(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // sum over a, b of ad_i[a][b] * ad_j[b][a]
      std::uint64_t acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          acc = (acc + mul_mod(algebra.constant(i, b, a), algebra.constant(j, a, b), p)) % p;
        }
      }
      k(i, j) = acc;
    }
  }
  return k;
}

bool is_killing_zero(const LieAlgebra& algebra) { return killing_form(algebra).is_zero(); }

bool is_unimodular(const LieAlgebra& algebra) {
  require_field(algebra, "unimodularity");
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t tr = 0;
    for (std::size_t j = 0; j < n; ++j) tr = (tr + algebra.constant(i, j, j)) % p;
    if (tr != 0) return false;
  }
  return true;
}

std::size_t symmetric_index(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  // Count multisets (x <= y <= z) that precede (a, b, c) lexicographically.
  std::size_t idx = 0;
  for (std::size_t x = 0; x < a; ++x) {
    const std::size_t m = n - x;  // choices y, z in [x, n): C(m+1, 2)
    idx += m * (m + 1) / 2;
  }
  for (std::size_t y = a; y < b; ++y) idx += n - y;
  idx += c - b;
  return idx;
}

FpMatrix invariant_symmetric_3form_system(const LieAlgebra& algebra) {
  require_field(algebra, "invariant forms");
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  const std::size_t cols = n * (n + 1) * (n + 2) / 6;
  FpMatrix sys(n * cols, cols, p);
  // Row (w, {x<=y<=z}) encodes w(.) acting as a derivation: sum of the three terms.
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        for (std::size_t z = y; z < n; ++z) {
          const std::size_t row = w * cols + symmetric_index(n, x, y, z);
          for (std::size_t m = 0; m < n; ++m) {
            if (auto c = algebra.constant(w, x, m)) sys.accumulate(row, symmetric_index(n, m, y, z), c);
            if (auto c = algebra.constant(w, y, m)) sys.accumulate(row, symmetric_index(n, x, m, z), c);
            if (auto c = algebra.constant(w, z, m)) sys.accumulate(row, symmetric_index(n, x, y, m), c);
          }
        }
      }
    }
  }
  return sys;
}

SymmetricFormSpace invariant_symmetric_3forms(const LieAlgebra& algebra) {
  if (algebra.dim() > kInvariantFormMaxRank) {
    throw GuardError("invariant forms: rank " + std::to_string(algebra.dim()) + " exceeds bound " +
                     std::to_string(kInvariantFormMaxRank));
  }
  SymmetricFormSpace out;
  out.basis = kernel_basis(invariant_symmetric_3form_system(algebra));
  out.dimension = out.basis.size();
  return out;
}

}  // namespace lieobstruct
