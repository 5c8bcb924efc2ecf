#include "lieobstruct/lifting.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lieobstruct/error.hpp"

namespace lieobstruct {

namespace {

std::uint64_t pi_power(const RingSpec& ring) { return ring.prime_power(ring.level() - 1); }

void require_lift_ring(const RingSpec& ring) {
  if (ring.level() < 2) throw InputError("lift ring must have level >= 2");
}

void require_residue_form(const AdForm& form, std::size_t n, std::uint64_t p, std::size_t degree) {
  if (form.rank() != n || form.prime() != p || form.degree() != degree ||
      form.coefficients() != Coefficients::Adjoint) {
    throw InputError("expected an adjoint " + std::to_string(degree) + "-form over F_" + std::to_string(p) +
                     " on a rank-" + std::to_string(n) + " algebra");
  }
}

// Sets c[i][j][.] = v and c[j][i][.] = -v for i < j.
void set_pair(std::vector<std::uint64_t>& c, const RingSpec& ring, std::size_t n, std::size_t i, std::size_t j,
              std::size_t m, std::uint64_t v) {
  c[(i * n + j) * n + m] = v;
  c[(j * n + i) * n + m] = ring.neg(v);
}

std::uint64_t saturating_power(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

}  // namespace

BracketLift make_bracket_lift(const LieAlgebra& base) {
  const RingSpec up = base.ring().at_level(base.ring().level() + 1);
  const std::size_t n = base.dim();
  std::vector<std::uint64_t> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) set_pair(c, up, n, i, j, m, base.constant(i, j, m));
    }
  }
  return {base, BracketAlgebra(up, n, std::move(c))};
}

BracketLift perturb_lift(const BracketLift& lift, const AdForm& t) {
  const RingSpec& ring = lift.lifted.ring();
  const std::size_t n = lift.lifted.dim();
  require_residue_form(t, n, ring.prime(), 2);
  const std::uint64_t pk = pi_power(ring);
  const SubsetIndex pairs(n, 2);
  std::vector<std::uint64_t> c(lift.lifted.constants());
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto ij = pairs.members(idx);
    for (std::size_t m = 0; m < n; ++m) {
      const std::uint64_t delta = t.coords()[idx * n + m] * pk;  // psi
      set_pair(c, ring, n, ij[0], ij[1], m, ring.add(lift.lifted.constant(ij[0], ij[1], m), delta));
    }
  }
  return {lift.base, BracketAlgebra(ring, n, std::move(c))};
}

AdForm correction_form(const BracketAlgebra& from, const BracketAlgebra& to) {
  if (!(from.ring() == to.ring()) || from.dim() != to.dim()) throw InputError("brackets live on different modules");
  const RingSpec& ring = from.ring();
  require_lift_ring(ring);
  const std::size_t n = from.dim();
  const std::uint64_t pk = pi_power(ring);
  const SubsetIndex pairs(n, 2);
  FpVector coords(pairs.size() * n, 0);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto ij = pairs.members(idx);
    for (std::size_t m = 0; m < n; ++m) {
      const std::uint64_t diff = ring.sub(to.constant(ij[0], ij[1], m), from.constant(ij[0], ij[1], m));
      if (diff % pk != 0) throw InputError("brackets differ outside pi^k B");
      coords[idx * n + m] = diff / pk;  // chi
    }
  }
  return {n, 2, ring.prime(), Coefficients::Adjoint, std::move(coords)};
}

AdForm jacobiator(const BracketLift& lift) {
  const RingSpec& ring = lift.lifted.ring();
  const std::size_t n = lift.lifted.dim();
  const std::uint64_t pk = pi_power(ring);
  const SubsetIndex triples(n, 3);
  FpVector coords(triples.size() * n, 0);
  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    const auto t = triples.members(idx);
    const Coords jac = lift.lifted.jacobiator(t[0], t[1], t[2]);
    for (std::size_t m = 0; m < n; ++m) {
      if (jac[m] % pk != 0) {
        throw InvariantViolation("Jacobiator not divisible by pi^k on triple (" + std::to_string(t[0]) + "," +
                                 std::to_string(t[1]) + "," + std::to_string(t[2]) + "): not a lift of a Lie algebra");
      }
      coords[idx * n + m] = jac[m] / pk;
    }
  }
  AdForm j(n, 3, ring.prime(), Coefficients::Adjoint, std::move(coords));
  if (!apply_differential(reduce_to_residue(lift.base), j).is_zero()) {
    throw InvariantViolation("dJ != 0 for a bracket lift");
  }
  return j;
}

ObstructionReport obstruction(const LieAlgebra& algebra) {
  const LieAlgebra residue = reduce_to_residue(algebra);
  const BracketLift canonical = make_bracket_lift(algebra);
  AdForm j = jacobiator(canonical);
  ObstructionReport report{residue, j, true, is_coboundary(residue, j), std::nullopt, std::nullopt};
  if (report.witness) {
    BracketLift corrected = perturb_lift(canonical, *report.witness);
    if (!corrected.lifted.satisfies_jacobi()) {
      throw InvariantViolation("witness-corrected lift fails the Jacobi identity");
    }
    report.lifted = LieAlgebra(std::move(corrected.lifted));
  } else {
    report.class_coordinates = class_coordinates(degree_cohomology(residue, 3, Coefficients::Adjoint), j.coords());
  }
  return report;
}

std::optional<std::size_t> correction_space_dimension(const BracketLift& lift) {
  const AdForm j = jacobiator(lift);
  const std::size_t n = lift.lifted.dim();
  if (n < 2) return 0;
  const FpMatrix d2 = differential_matrix(reduce_to_residue(lift.base), 2, Coefficients::Adjoint);
  if (!solve(d2, j.coords())) return std::nullopt;
  return d2.cols() - rank(d2);
}

std::optional<LiftFamily> lift_family(const LieAlgebra& algebra) {
  ObstructionReport rep = obstruction(algebra);
  if (!rep.lifted) return std::nullopt;
  const std::size_t n = algebra.dim();
  const std::uint64_t p = algebra.ring().prime();
  LiftFamily family{*rep.lifted, {}, 0, 0, false, {}};
  if (n >= 2) {
    const DegreeCohomology h2 = degree_cohomology(rep.residue, 2, Coefficients::Adjoint);
    for (const auto& r : h2.representatives) family.h2_basis.emplace_back(n, 2, p, Coefficients::Adjoint, r);
  }
  family.h2_dim = family.h2_basis.size();
  family.member_count = saturating_power(p, family.h2_dim);
  if (family.member_count > kLiftFamilyBound) return family;

  const BracketLift base{algebra, family.base_lift.as_bracket_algebra()};
  for (std::uint64_t idx = 0; idx < family.member_count; ++idx) {
    FpVector coords(family.h2_dim, 0);
    std::uint64_t x = idx;
    for (std::size_t i = family.h2_dim; i-- > 0;) {
      coords[i] = x % p;
      x /= p;
    }
    AdForm t = AdForm::zero(n, 2, p);
    for (std::size_t i = 0; i < family.h2_dim; ++i) t = t + family.h2_basis[i].scaled(coords[i]);
    family.members.emplace_back(std::move(coords), LieAlgebra(perturb_lift(base, t).lifted));
  }
  family.materialized = true;
  return family;
}

ModuleMap::ModuleMap(RingSpec ring, std::size_t n, std::vector<std::uint64_t> columns)
    : ring_(ring), n_(n), m_(std::move(columns)) {
  if (m_.size() != n_ * n_) throw InputError("module map has wrong number of entries");
  for (auto x : m_) {
    if (!ring_.is_canonical(x)) throw InputError("module map entry not canonical");
  }
}

ModuleMap ModuleMap::identity(RingSpec ring, std::size_t n) {
  std::vector<std::uint64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return {ring, n, std::move(m)};
}

Coords ModuleMap::apply(std::span<const std::uint64_t> x) const {
  if (x.size() != n_) throw InputError("module map applied to a vector of wrong length");
  Coords out(n_, 0);
  for (std::size_t c = 0; c < n_; ++c) {
    if (x[c] == 0) continue;
    for (std::size_t r = 0; r < n_; ++r) out[r] = ring_.add(out[r], ring_.mul(entry(r, c), x[c]));
  }
  return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!(inner.ring_ == ring_) || inner.n_ != n_) throw InputError("module maps live on different modules");
  std::vector<std::uint64_t> m(n_ * n_);
  for (std::size_t c = 0; c < n_; ++c) {
    const std::span<const std::uint64_t> col(inner.m_.data() + c * n_, n_);
    const Coords img = apply(col);
    std::copy(img.begin(), img.end(), m.begin() + static_cast<std::ptrdiff_t>(c * n_));
  }
  return {ring_, n_, std::move(m)};
}

namespace {

ModuleMap identity_plus_psi(const RingSpec& ring, const AdForm& phi, bool subtract) {
  require_lift_ring(ring);
  const std::size_t n = phi.rank();
  require_residue_form(phi, n, ring.prime(), 1);
  const std::uint64_t pk = pi_power(ring);
  std::vector<std::uint64_t> m(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    m[a * n + a] = 1;
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint64_t delta = phi.coords()[a * n + r] * pk;
      m[a * n + r] = subtract ? ring.sub(m[a * n + r], delta) : ring.add(m[a * n + r], delta);
    }
  }
  return {ring, n, std::move(m)};
}

}  // namespace

ModuleMap psi_automorphism(const RingSpec& ring, const AdForm& phi) { return identity_plus_psi(ring, phi, false); }

ModuleMap psi_automorphism_inverse(const RingSpec& ring, const AdForm& phi) {
  return identity_plus_psi(ring, phi, true);
}

std::optional<AdForm> lifts_equivalent(const LieAlgebra& first, const LieAlgebra& second) {
  if (!(first.ring() == second.ring()) || first.dim() != second.dim()) {
    throw InputError("lifts of different bases");
  }
  require_lift_ring(first.ring());
  if (!(reduce_algebra(first) == reduce_algebra(second))) throw InputError("lifts of different bases");

  const std::size_t n = first.dim();
  const AdForm delta = correction_form(first.as_bracket_algebra(), second.as_bracket_algebra());
  const LieAlgebra residue = reduce_to_residue(first);
  if (n == 0) return AdForm::zero(0, 1, first.ring().prime());
  auto phi = is_coboundary(residue, delta.scaled(first.ring().prime() - 1));
  if (!phi) return std::nullopt;

  const ModuleMap psi = psi_automorphism(first.ring(), *phi);
  for (std::size_t i = 0; i < n; ++i) {
    const Coords pi = psi.apply(basis_vector(n, i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto br = first.basis_bracket(i, j);
      if (second.bracket(pi, psi.apply(basis_vector(n, j))) != psi.apply(br)) {
        throw InvariantViolation("cohomologous lifts but Psi does not preserve brackets");
      }
    }
  }
  return phi;
}

LieAlgebra extend_by_section(const LieAlgebra& residue, unsigned level) {
  const RingSpec& ring = residue.ring();
  if (ring.family() != RingFamily::PowerSeriesQuotient || !ring.is_field()) {
    throw InputError("extend_by_section needs a level-1 power-series algebra");
  }
  if (level < 1) throw InputError("level must be >= 1");
  std::vector<std::uint64_t> c(residue.constants().size());
  std::transform(residue.constants().begin(), residue.constants().end(), c.begin(), [&](std::uint64_t v) {
    RingElem x(ring, v);
    for (unsigned l = 1; l < level; ++l) x = split_section(x);
    return x.value();
  });
  return LieAlgebra(ring.at_level(level), residue.dim(), std::move(c));
}

TowerReport lift_tower(const LieAlgebra& residue, unsigned target_level) {
  if (!residue.ring().is_field()) throw InputError("lift_tower starts from an algebra over the residue field");
  if (target_level < 1) throw InputError("target level must be >= 1");
  std::vector<TowerStep> steps;
  LieAlgebra current = residue;
  for (unsigned level = 1; level < target_level; ++level) {
    ObstructionReport rep = obstruction(current);
    steps.push_back(TowerStep{level, rep.cocycle, rep.witness, rep.class_coordinates});
    if (!rep.lifted) return TowerReport{target_level, level, std::move(steps), std::move(current)};
    current = std::move(*rep.lifted);
  }
  return TowerReport{target_level, target_level, std::move(steps), std::move(current)};
}

}  // namespace lieobstruct
