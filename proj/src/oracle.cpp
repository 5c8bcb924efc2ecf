#include "lieobstruct/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>

#include "lieobstruct/error.hpp"

namespace lieobstruct {

namespace {

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t limit, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > limit / p) {
      throw GuardError(std::string("oracle budget exceeded: ") + std::to_string(p) + "^" + std::to_string(e) + " " +
                       what + " > " + std::to_string(limit));
    }
    r *= p;
  }
  return r;
}

// Mixed-radix counter over F_p^len, first digit fastest.
bool advance(std::vector<std::uint64_t>& digits, std::uint64_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// [x, y] from raw constants.
std::vector<std::uint64_t> raw_bracket(const RingSpec& ring, std::size_t n, const std::vector<std::uint64_t>& c,
                                       const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t xy = ring.mul(x[i], y[j]);
      for (std::size_t m = 0; m < n; ++m) out[m] = ring.add(out[m], ring.mul(xy, c[(i * n + j) * n + m]));
    }
  }
  return out;
}

std::vector<std::uint64_t> unit(std::size_t n, std::size_t i) {
  std::vector<std::uint64_t> v(n, 0);
  v[i] = 1;
  return v;
}

bool raw_jacobi(const RingSpec& ring, std::size_t n, const std::vector<std::uint64_t>& c) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t d = b + 1; d < n; ++d) {
        const auto ea = unit(n, a), eb = unit(n, b), ed = unit(n, d);
        const auto t1 = raw_bracket(ring, n, c, raw_bracket(ring, n, c, ea, eb), ed);
        const auto t2 = raw_bracket(ring, n, c, raw_bracket(ring, n, c, eb, ed), ea);
        const auto t3 = raw_bracket(ring, n, c, raw_bracket(ring, n, c, ed, ea), eb);
        for (std::size_t m = 0; m < n; ++m) {
          if (ring.add(ring.add(t1[m], t2[m]), t3[m]) != 0) return false;
        }
      }
    }
  }
  return true;
}

// Alternating s-cochain stored on increasing index tuples, valued in F_p^width.
struct RawCochain {
  std::size_t n, s, width;
  std::uint64_t p;
  std::map<std::vector<std::size_t>, std::vector<std::uint64_t>> values;

  // Value on an arbitrary tuple of basis indices.
  std::vector<std::uint64_t> at(std::vector<std::size_t> idx) const {
    std::vector<std::uint64_t> zero(width, 0);
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
        if (idx[b] == idx[b + 1]) return zero;
        if (idx[b] > idx[b + 1]) {
          std::swap(idx[b], idx[b + 1]);
          sign = -sign;
        }
      }
    }
    auto it = values.find(idx);
    if (it == values.end()) return zero;
    auto v = it->second;
    if (sign < 0) {
      for (auto& x : v) x = (p - x) % p;
    }
    return v;
  }
};

void all_tuples(std::size_t n, std::size_t s, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == s) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    all_tuples(n, s, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  all_tuples(n, s, 0, cur, out);
  return out;
}

// (dw)(x_0..x_s) on basis vectors, straight from the defining sum.
std::vector<std::uint64_t> raw_d_at(const LieAlgebra& algebra, const RawCochain& w, bool adjoint,
                                    const std::vector<std::size_t>& x) {
  const std::size_t n = w.n;
  const std::uint64_t p = w.p;
  std::vector<std::uint64_t> out(w.width, 0);
  auto add_scaled = [&](const std::vector<std::uint64_t>& v, std::uint64_t c, bool negate) {
    for (std::size_t m = 0; m < w.width; ++m) {
      std::uint64_t t = v[m] * c % p;
      if (negate) t = (p - t) % p;
      out[m] = (out[m] + t) % p;
    }
  };
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!adjoint) break;
    std::vector<std::size_t> rest;
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (b != a) rest.push_back(x[b]);
    }
    const auto val = w.at(rest);
    // [e_{x_a}, val]
    std::vector<std::uint64_t> br(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) br[m] = (br[m] + val[j] * algebra.constant(x[a], j, m)) % p;
    }
    add_scaled(br, 1, a % 2 == 1);
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      for (std::size_t m = 0; m < n; ++m) {
        const std::uint64_t c = algebra.constant(x[a], x[b], m);
        if (c == 0) continue;
        std::vector<std::size_t> args{m};
        for (std::size_t q = 0; q < x.size(); ++q) {
          if (q != a && q != b) args.push_back(x[q]);
        }
        add_scaled(w.at(args), c, (a + b) % 2 == 1);
      }
    }
  }
  return out;
}

// Number of w in Lambda^s with dw = 0, by enumeration.
std::uint64_t count_cocycles(const LieAlgebra& algebra, std::size_t s, bool adjoint, OracleBudget budget) {
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  const std::size_t width = adjoint ? n : 1;
  const auto domain = increasing_tuples(n, s);
  const auto targets = increasing_tuples(n, s + 1);
  const std::size_t len = domain.size() * width;
  checked_power(p, len, budget.max_candidates, "cochains");

  std::vector<std::uint64_t> digits(len, 0);
  std::uint64_t count = 0;
  do {
    RawCochain w{n, s, width, p, {}};
    for (std::size_t t = 0; t < domain.size(); ++t) {
      w.values[domain[t]] = std::vector<std::uint64_t>(digits.begin() + static_cast<std::ptrdiff_t>(t * width),
                                                       digits.begin() + static_cast<std::ptrdiff_t>((t + 1) * width));
    }
    bool closed = true;
    for (const auto& x : targets) {
      const auto v = raw_d_at(algebra, w, adjoint, x);
      if (std::any_of(v.begin(), v.end(), [](std::uint64_t c) { return c != 0; })) {
        closed = false;
        break;
      }
    }
    if (closed) ++count;
  } while (advance(digits, p));
  return count;
}

std::size_t log_exact(std::uint64_t value, std::uint64_t p) {
  std::size_t e = 0;
  while (value > 1) {
    if (value % p != 0) throw InvariantViolation("oracle count is not a power of p");
    value /= p;
    ++e;
  }
  return e;
}

}  // namespace

OracleBudget budget_from_env(OracleBudget defaults) {
  const char* raw = std::getenv("LIEOBSTRUCT_BUDGET");
  if (raw == nullptr || *raw == '\0') return defaults;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw InputError("LIEOBSTRUCT_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return {value, value};
}

std::vector<LieAlgebra> enumerate_lifts_bruteforce(const LieAlgebra& algebra, OracleBudget budget) {
  const RingSpec& base = algebra.ring();
  const RingSpec up = base.at_level(base.level() + 1);
  const std::size_t n = algebra.dim();
  const std::uint64_t p = base.prime();
  const std::uint64_t pk = up.prime_power(base.level());
  const auto pairs = ordered_pairs(n);
  checked_power(p, pairs.size() * n, budget.max_candidates, "candidates");

  std::vector<std::uint64_t> digits(pairs.size() * n, 0);
  std::vector<LieAlgebra> out;
  do {
    std::vector<std::uint64_t> c(n * n * n, 0);
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto [i, j] = pairs[q];
      for (std::size_t m = 0; m < n; ++m) {
        const std::uint64_t v = up.add(algebra.constant(i, j, m), digits[q * n + m] * pk);
        c[(i * n + j) * n + m] = v;
        c[(j * n + i) * n + m] = up.neg(v);
      }
    }
    if (raw_jacobi(up, n, c)) out.emplace_back(up, n, std::move(c));
  } while (advance(digits, p));
  return out;
}

std::vector<std::vector<std::size_t>> partition_by_psi_equivalence(const std::vector<LieAlgebra>& lifts,
                                                                  OracleBudget budget) {
  if (lifts.empty()) return {};
  const RingSpec ring = lifts.front().ring();
  const std::size_t n = lifts.front().dim();
  if (ring.level() < 2) throw InputError("Psi-equivalence needs lifts at level >= 2");
  for (const auto& l : lifts) {
    if (!(l.ring() == ring) || l.dim() != n) throw InputError("lifts of different bases");
  }
  const std::uint64_t p = ring.prime();
  const std::uint64_t pk = ring.prime_power(ring.level() - 1);
  checked_power(p, n * n, budget.max_maps, "maps");

  std::map<std::vector<std::uint64_t>, std::size_t> where;
  for (std::size_t i = 0; i < lifts.size(); ++i) where.emplace(lifts[i].constants(), i);

  std::vector<bool> seen(lifts.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < lifts.size(); ++start) {
    if (seen[start]) continue;
    const auto& c1 = lifts[start].constants();
    std::vector<std::size_t> cls;
    std::vector<std::uint64_t> phi(n * n, 0);  // phi[a*n + r]: coordinate r of phi(e_a)
    do {
      // Psi^{-1} e_a = e_a - psi(phi(e_a)).
      std::vector<std::vector<std::uint64_t>> inv(n), fwd(n);
      for (std::size_t a = 0; a < n; ++a) {
        inv[a] = unit(n, a);
        fwd[a] = unit(n, a);
        for (std::size_t r = 0; r < n; ++r) {
          inv[a][r] = ring.sub(inv[a][r], phi[a * n + r] * pk);
          fwd[a][r] = ring.add(fwd[a][r], phi[a * n + r] * pk);
        }
      }
      auto apply_psi = [&](const std::vector<std::uint64_t>& v) {
        std::vector<std::uint64_t> out(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t r = 0; r < n; ++r) out[r] = ring.add(out[r], ring.mul(v[a], fwd[a][r]));
        }
        return out;
      };
      std::vector<std::uint64_t> c2(n * n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto v = apply_psi(raw_bracket(ring, n, c1, inv[i], inv[j]));
          std::copy(v.begin(), v.end(), c2.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
        }
      }
      const auto it = where.find(c2);
      if (it == where.end()) throw InputError("lift list is not closed under Psi-transport");
      if (!seen[it->second]) {
        seen[it->second] = true;
        cls.push_back(it->second);
      }
    } while (advance(phi, p));
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t cohomology_bruteforce(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs,
                                  OracleBudget budget) {
  if (!algebra.ring().is_field()) throw InputError("cohomology_bruteforce needs a level-1 algebra");
  const std::size_t n = algebra.dim();
  if (s > n) return 0;
  const bool adjoint = coeffs == Coefficients::Adjoint;
  const std::uint64_t p = algebra.ring().prime();
  const std::size_t z = log_exact(count_cocycles(algebra, s, adjoint, budget), p);
  if (s == 0) return z;
  // |B^s| = |Lambda^{s-1}| / |Z^{s-1}|
  const std::size_t width = adjoint ? n : 1;
  const std::size_t prev_dim = increasing_tuples(n, s - 1).size() * width;
  const std::size_t z_prev = log_exact(count_cocycles(algebra, s - 1, adjoint, budget), p);
  return z - (prev_dim - z_prev);
}

}  // namespace lieobstruct
