#include "lieobstruct/ce_complex.hpp"

#include <bit>
#include <future>
#include <string>

namespace lieobstruct {

namespace {

void require_complex_input(const LieAlgebra& algebra) {
  if (!algebra.ring().is_field()) throw InputError("cochain complex is built over the residue field only");
  if (algebra.dim() > kMaxComplexRank) {
    throw GuardError("cochain complex: rank " + std::to_string(algebra.dim()) + " exceeds bound " +
                     std::to_string(kMaxComplexRank));
  }
}

std::uint64_t signed_value(std::uint64_t c, bool negative, std::uint64_t p) {
  return negative && c != 0 ? p - c : c;
}

void enumerate_subsets(std::size_t n, std::size_t s, std::size_t start, std::uint32_t acc,
                       std::vector<std::uint32_t>& out) {
  if (s == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + s <= n; ++i) {
    enumerate_subsets(n, s - 1, i + 1, acc | (std::uint32_t{1} << i), out);
  }
}

struct DegreeData {
  FpMatrix differential;                // d_s
  std::vector<FpVector> kernel;         // basis of Z^s
  std::vector<FpVector> image;          // echelon basis of d_s(Lambda^s) inside Lambda^{s+1}
};

DegreeData degree_data(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs) {
  DegreeData d{differential_matrix(algebra, s, coeffs), {}, {}};
  d.kernel = kernel_basis(d.differential);
  const RowEchelon img = row_reduce(d.differential.transposed());
  for (std::size_t r = 0; r < img.rank(); ++r) {
    const auto row = img.reduced.row(r);
    d.image.emplace_back(row.begin(), row.end());
  }
  return d;
}

DegreeCohomology assemble(std::size_t s, std::size_t cochain_dim, std::uint64_t p,
                          const std::vector<FpVector>& kernel, const std::vector<FpVector>& image_from_below) {
  DegreeCohomology h;
  h.degree = s;
  h.prime = p;
  h.cochain_dim = cochain_dim;
  h.cocycle_dim = kernel.size();
  h.coboundary_dim = image_from_below.size();
  h.coboundary_basis = image_from_below;
  IncrementalBasis boundaries(cochain_dim, p);
  for (const auto& b : image_from_below) boundaries.insert(b);
  IncrementalBasis spanned = boundaries;
  for (const auto& z : kernel) {
    if (spanned.insert(z)) h.representatives.push_back(boundaries.reduce(z));
  }
  if (h.representatives.size() != h.dim()) {
    throw InvariantViolation("cohomology: image is not contained in the kernel (d^2 != 0)");
  }
  return h;
}

}  // namespace

std::string to_string(Coefficients coeffs) { return coeffs == Coefficients::Adjoint ? "ad" : "trivial"; }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t cochain_dimension(std::size_t n, std::size_t s, Coefficients coeffs) {
  const std::size_t subsets = binomial(n, s);
  return coeffs == Coefficients::Adjoint ? subsets * n : subsets;
}

SubsetIndex::SubsetIndex(std::size_t n, std::size_t s) {
  if (n > kMaxComplexRank) throw GuardError("SubsetIndex: rank exceeds bound");
  if (s <= n) enumerate_subsets(n, s, 0, 0, masks_);
  lookup_.assign(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < masks_.size(); ++i) lookup_[masks_[i]] = static_cast<std::uint32_t>(i);
}

std::vector<std::size_t> SubsetIndex::members(std::size_t idx) const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = masks_[idx]; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

AdForm::AdForm(std::size_t rank, std::size_t degree, std::uint64_t p, Coefficients coeffs, FpVector coords)
    : n_(rank), s_(degree), p_(p), coeffs_(coeffs), coords_(std::move(coords)) {
  if (coords_.size() != cochain_dimension(rank, degree, coeffs)) {
    throw InputError("form has " + std::to_string(coords_.size()) + " coordinates, expected " +
                     std::to_string(cochain_dimension(rank, degree, coeffs)));
  }
  for (auto x : coords_) {
    if (x >= p) throw InputError("form coordinate not reduced mod p");
  }
}

AdForm AdForm::zero(std::size_t rank, std::size_t degree, std::uint64_t p, Coefficients coeffs) {
  return {rank, degree, p, coeffs, FpVector(cochain_dimension(rank, degree, coeffs), 0)};
}

bool AdForm::is_zero() const {
  for (auto x : coords_) {
    if (x != 0) return false;
  }
  return true;
}

AdForm AdForm::operator+(const AdForm& other) const {
  if (other.n_ != n_ || other.s_ != s_ || other.p_ != p_ || other.coeffs_ != coeffs_) {
    throw InputError("form shapes differ");
  }
  FpVector c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + other.coords_[i]) % p_;
  return {n_, s_, p_, coeffs_, std::move(c)};
}

AdForm AdForm::scaled(std::uint64_t c) const {
  FpVector v(coords_);
  for (auto& x : v) x = mul_mod(x, c % p_, p_);
  return {n_, s_, p_, coeffs_, std::move(v)};
}

AdForm AdForm::operator-(const AdForm& other) const { return *this + other.scaled(p_ - 1); }

FpMatrix differential_matrix(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs) {
  require_complex_input(algebra);
  const std::size_t n = algebra.dim();
  if (s > n) throw InputError("differential degree " + std::to_string(s) + " out of range 0.." + std::to_string(n));
  const std::uint64_t p = algebra.ring().prime();
  const bool adjoint = coeffs == Coefficients::Adjoint;
  const std::size_t width = adjoint ? n : 1;
  FpMatrix d(cochain_dimension(n, s + 1, coeffs), cochain_dimension(n, s, coeffs), p);
  if (s + 1 > n) return d;

  const SubsetIndex domain(n, s);
  const SubsetIndex target(n, s + 1);
  for (std::size_t t_idx = 0; t_idx < target.size(); ++t_idx) {
    const std::uint32_t t_mask = target.mask(t_idx);
    const auto t = target.members(t_idx);
    if (adjoint) {
      // sum_i (-1)^i [x_i, w(.. ^x_i ..)]
      for (std::size_t i = 0; i <= s; ++i) {
        const std::size_t s_idx = domain.index_of(t_mask & ~(std::uint32_t{1} << t[i]));
        for (std::size_t m = 0; m < n; ++m) {
          const auto br = algebra.basis_bracket(t[i], m);
          for (std::size_t r = 0; r < n; ++r) {
            if (br[r] != 0) d.accumulate(t_idx * n + r, s_idx * n + m, signed_value(br[r], i % 2 == 1, p));
          }
        }
      }
    }
    // sum_{i<j} (-1)^{i+j} w([x_i, x_j], rest)
    for (std::size_t i = 0; i <= s; ++i) {
      for (std::size_t j = i + 1; j <= s; ++j) {
        const std::uint32_t rest = t_mask & ~(std::uint32_t{1} << t[i]) & ~(std::uint32_t{1} << t[j]);
        const auto br = algebra.basis_bracket(t[i], t[j]);
        for (std::size_t a = 0; a < n; ++a) {
          const std::uint32_t bit = std::uint32_t{1} << a;
          if (br[a] == 0 || (rest & bit) != 0) continue;
          // w(e_a, e_rest) = (-1)^{position of a} w(sorted)
          const std::size_t pos = static_cast<std::size_t>(std::popcount(rest & (bit - 1)));
          const std::size_t s_idx = domain.index_of(rest | bit);
          const std::uint64_t v = signed_value(br[a], (i + j + pos) % 2 == 1, p);
          for (std::size_t m = 0; m < width; ++m) d.accumulate(t_idx * width + m, s_idx * width + m, v);
        }
      }
    }
  }
  return d;
}

AdForm apply_differential(const LieAlgebra& algebra, const AdForm& form) {
  if (form.rank() != algebra.dim() || form.prime() != algebra.ring().prime()) {
    throw InputError("form does not live on this algebra");
  }
  if (form.degree() >= form.rank()) {
    return AdForm::zero(form.rank(), form.degree() + 1, form.prime(), form.coefficients());
  }
  const FpMatrix d = differential_matrix(algebra, form.degree(), form.coefficients());
  return {form.rank(), form.degree() + 1, form.prime(), form.coefficients(), apply_matrix(d, form.coords())};
}

FpVector evaluate_form(const AdForm& form, const std::vector<FpVector>& args) {
  const std::size_t n = form.rank();
  const std::size_t s = form.degree();
  const std::uint64_t p = form.prime();
  if (args.size() != s) {
    throw InputError("form of degree " + std::to_string(s) + " evaluated at " + std::to_string(args.size()) +
                     " arguments");
  }
  for (const auto& a : args) {
    if (a.size() != n) throw InputError("form argument has wrong length");
  }
  const std::size_t width = form.coefficients() == Coefficients::Adjoint ? n : 1;
  FpVector out(width, 0);
  const SubsetIndex subsets(n, s);
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    const auto coeff = std::span<const std::uint64_t>(form.coords()).subspan(idx * width, width);
    bool any = false;
    for (auto c : coeff) any = any || c != 0;
    if (!any) continue;
    const auto cols = subsets.members(idx);
    FpMatrix minor(s, s, p);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) minor(r, c) = args[r][cols[c]] % p;
    }
    const std::uint64_t det = determinant(std::move(minor));
    if (det == 0) continue;
    for (std::size_t m = 0; m < width; ++m) out[m] = (out[m] + mul_mod(det, coeff[m], p)) % p;
  }
  return out;
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dim());
  return out;
}

CohomologyReport cohomology(const LieAlgebra& algebra, Coefficients coeffs, CohomologyOptions options) {
  require_complex_input(algebra);
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  const unsigned threads = options.threads == 0 ? 1 : options.threads;

  // Degrees are independent; each task writes only its own slot.
  std::vector<DegreeData> data(n + 1, DegreeData{FpMatrix(0, 0, p), {}, {}});
  for (std::size_t first = 0; first <= n; first += threads) {
    std::vector<std::future<void>> batch;
    for (std::size_t s = first; s <= n && s < first + threads; ++s) {
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                 [&, s] { data[s] = degree_data(algebra, s, coeffs); }));
    }
    for (auto& f : batch) f.get();
  }

  CohomologyReport report{coeffs, n, p, {}};
  for (std::size_t s = 0; s <= n; ++s) {
    static const std::vector<FpVector> kNone;
    report.degrees.push_back(assemble(s, cochain_dimension(n, s, coeffs), p, data[s].kernel,
                                      s == 0 ? kNone : data[s - 1].image));
  }
  return report;
}

DegreeCohomology degree_cohomology(const LieAlgebra& algebra, std::size_t s, Coefficients coeffs) {
  require_complex_input(algebra);
  const std::size_t n = algebra.dim();
  if (s > n) throw InputError("cohomology degree " + std::to_string(s) + " out of range 0.." + std::to_string(n));
  const DegreeData here = degree_data(algebra, s, coeffs);
  std::vector<FpVector> below;
  if (s > 0) below = degree_data(algebra, s - 1, coeffs).image;
  return assemble(s, cochain_dimension(n, s, coeffs), algebra.ring().prime(), here.kernel, below);
}

std::optional<FpVector> class_coordinates(const DegreeCohomology& h, std::span<const std::uint64_t> cocycle) {
  if (cocycle.size() != h.cochain_dim) throw InputError("class_coordinates: vector length mismatch");
  // Columns: coboundary basis, then representatives. Solve and keep the tail.
  const std::size_t nb = h.coboundary_basis.size();
  const std::size_t nr = h.representatives.size();
  FpMatrix m(h.cochain_dim, nb + nr, h.prime);
  for (std::size_t c = 0; c < nb; ++c) {
    for (std::size_t r = 0; r < h.cochain_dim; ++r) m(r, c) = h.coboundary_basis[c][r];
  }
  for (std::size_t c = 0; c < nr; ++c) {
    for (std::size_t r = 0; r < h.cochain_dim; ++r) m(r, nb + c) = h.representatives[c][r];
  }
  const auto x = solve(m, cocycle);
  if (!x) return std::nullopt;
  return FpVector(x->begin() + static_cast<std::ptrdiff_t>(nb), x->end());
}

std::optional<AdForm> is_coboundary(const LieAlgebra& algebra, const AdForm& form) {
  if (form.degree() == 0) throw InputError("is_coboundary: degree must be >= 1");
  if (form.degree() > form.rank()) {
    return AdForm::zero(form.rank(), form.degree() - 1, form.prime(), form.coefficients());
  }
  const FpMatrix d = differential_matrix(algebra, form.degree() - 1, form.coefficients());
  auto eta = solve(d, form.coords());
  if (!eta) return std::nullopt;
  return AdForm(form.rank(), form.degree() - 1, form.prime(), form.coefficients(), std::move(*eta));
}

}  // namespace lieobstruct
