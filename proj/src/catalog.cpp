#include "lieobstruct/catalog.hpp"

#include <charconv>

#include "lieobstruct/structure.hpp"

namespace lieobstruct {

namespace {

using IntMatrix = std::vector<std::int64_t>;  // n x n, row-major

struct MatrixBasis {
  std::size_t size;                // matrix size
  std::vector<IntMatrix> elements;  // basis of the subalgebra
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b, std::size_t s) {
  IntMatrix out(s * s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      for (std::size_t j = 0; j < s; ++j) {
        out[i * s + j] += a[i * s + k] * b[k * s + j] - b[i * s + k] * a[k * s + j];
      }
    }
  }
  return out;
}

IntMatrix unit(std::size_t s, std::size_t i, std::size_t j) {
  IntMatrix m(s * s, 0);
  m[i * s + j] = 1;
  return m;
}

MatrixBasis sl_basis(std::size_t s) {
  MatrixBasis b{s, {}};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i != j) b.elements.push_back(unit(s, i, j));
    }
  }
  for (std::size_t i = 0; i + 1 < s; ++i) {
    IntMatrix h(s * s, 0);
    h[i * s + i] = 1;
    h[(i + 1) * s + (i + 1)] = -1;
    b.elements.push_back(std::move(h));
  }
  return b;
}

// Coordinates of a trace-zero matrix in sl_basis: off-diagonal entries
// directly, diagonal d via h-coefficients sum_{j <= i} d_j.
std::vector<std::int64_t> sl_coordinates(const IntMatrix& m, std::size_t s) {
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i != j) coords.push_back(m[i * s + j]);
    }
  }
  std::int64_t running = 0;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    running += m[i * s + i];
    coords.push_back(running);
  }
  return coords;
}

std::vector<std::int64_t> sl_constants(std::size_t s) {
  const MatrixBasis b = sl_basis(s);
  const std::size_t n = b.elements.size();
  std::vector<std::int64_t> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto coords = sl_coordinates(commutator(b.elements[i], b.elements[j], s), s);
      for (std::size_t m = 0; m < n; ++m) c[(i * n + j) * n + m] = coords[m];
    }
  }
  return c;
}

std::vector<std::int64_t> triangular_constants(std::size_t s) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) idx.emplace_back(i, j);
  }
  const std::size_t n = idx.size();
  auto position = [&](std::size_t i, std::size_t j) {
    for (std::size_t a = 0; a < n; ++a) {
      if (idx[a] == std::pair{i, j}) return a;
    }
    return n;
  };
  std::vector<std::int64_t> c(n * n * n, 0);
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto [i, j] = idx[a];
      const auto [k, l] = idx[b];
      if (j == k) c[(a * n + b) * n + position(i, l)] += 1;
      if (l == i) c[(a * n + b) * n + position(k, j)] -= 1;
    }
  }
  return c;
}

std::size_t parse_size(std::string_view text, std::string_view full) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("catalog: cannot parse size in '" + std::string(full) + "'");
  }
  return v;
}

}  // namespace

CatalogName parse_catalog_name(std::string_view name, std::size_t n_hint) {
  CatalogName out;
  const auto open = name.find('(');
  if (open != std::string_view::npos) {
    if (name.back() != ')') throw InputError("catalog: malformed name '" + std::string(name) + "'");
    out.base = std::string(name.substr(0, open));
    out.n = parse_size(name.substr(open + 1, name.size() - open - 2), name);
    if (n_hint != 0 && n_hint != out.n) {
      throw InputError("catalog: size in '" + std::string(name) + "' disagrees with n = " + std::to_string(n_hint));
    }
  } else {
    out.base = std::string(name);
    out.n = n_hint;
  }
  if (out.base == "heisenberg" && out.n == 0) out.n = 3;
  const bool known = out.base == "abelian" || out.base == "heisenberg" || out.base == "sl" ||
                     out.base == "psl" || out.base == "nilpotent-triangular";
  if (!known) throw InputError("catalog: unknown algebra '" + std::string(name) + "'");
  if (out.base == "heisenberg" && out.n % 2 == 0) {
    throw InputError("catalog: heisenberg needs odd n >= 3");
  }
  if ((out.base == "sl" || out.base == "psl") && out.n < 2) throw InputError("catalog: sl(n) needs n >= 2");
  if (out.base == "nilpotent-triangular" && out.n < 2) {
    throw InputError("catalog: nilpotent-triangular(n) needs n >= 2");
  }
  return out;
}

std::vector<std::int64_t> catalog_integer_constants(const CatalogName& name) {
  const std::size_t n = name.n;
  if (name.base == "abelian") return std::vector<std::int64_t>(n * n * n, 0);
  if (name.base == "heisenberg") {
    const std::size_t m = n / 2;
    std::vector<std::int64_t> c(n * n * n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      c[(i * n + (m + i)) * n + 2 * m] = 1;
      c[((m + i) * n + i) * n + 2 * m] = -1;
    }
    return c;
  }
  if (name.base == "sl") return sl_constants(n);
  if (name.base == "nilpotent-triangular") return triangular_constants(n);
  return {};
}

std::size_t catalog_rank(const CatalogName& name) {
  if (name.base == "sl") return name.n * name.n - 1;
  if (name.base == "nilpotent-triangular") return name.n * (name.n - 1) / 2;
  return name.n;
}

LieAlgebra catalog(const CatalogName& name, const RingSpec& ring) {
  if (name.base == "psl") {
    if (name.n % ring.prime() != 0) throw InputError("center is trivial; psl = sl");
    if (!ring.is_field()) throw InputError("catalog: psl is defined over the residue field only");
    const LieAlgebra sl = from_integer_constants(ring, name.n * name.n - 1, sl_constants(name.n));
    return quotient_by_center(sl).quotient;
  }
  const auto ints = catalog_integer_constants(name);
  return from_integer_constants(ring, catalog_rank(name), ints);
}

LieAlgebra catalog(std::string_view name, std::size_t n, const RingSpec& ring) {
  return catalog(parse_catalog_name(name, n), ring);
}

const std::vector<std::string>& integer_catalog_names() {
  static const std::vector<std::string> names{"abelian", "heisenberg", "sl", "nilpotent-triangular"};
  return names;
}

}  // namespace lieobstruct
