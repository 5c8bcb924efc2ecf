#include <random>

#include "doctest.h"
#include "lieobstruct/catalog.hpp"
#include "lieobstruct/error.hpp"
#include "lieobstruct/lifting.hpp"

using namespace lieobstruct;

namespace {

const RingSpec F2 = RingSpec::padic(2, 1);
const RingSpec F3 = RingSpec::padic(3, 1);
const RingSpec F5 = RingSpec::padic(5, 1);

AdForm random_form(std::mt19937_64& rng, std::size_t n, std::size_t s, std::uint64_t p) {
  AdForm f = AdForm::zero(n, s, p);
  for (auto& x : f.coords()) x = rng() % p;
  return f;
}

}  // namespace

TEST_CASE("make_bracket_lift") {
  const BracketLift ab = make_bracket_lift(catalog("abelian", 2, F3));
  CHECK(ab.lifted.ring() == RingSpec::padic(3, 2));
  CHECK(ab.lifted.satisfies_jacobi());
  CHECK(make_bracket_lift(catalog("heisenberg", 3, F3)).lifted.satisfies_jacobi());
  // least representatives: 2 = -1 in F_3 lifts to 2, not 8, so [h,[e,f]] + ... = -3h
  const BracketLift s = make_bracket_lift(catalog("sl", 2, F3));
  CHECK_FALSE(s.lifted.satisfies_jacobi());
  CHECK(reduce_algebra(s.lifted) == s.base.as_bracket_algebra());
  const BracketLift p = make_bracket_lift(catalog("psl", 3, F3));
  CHECK_FALSE(p.lifted.satisfies_jacobi());
  CHECK(reduce_algebra(p.lifted) == p.base.as_bracket_algebra());
}

TEST_CASE("perturb_lift") {
  std::mt19937_64 rng(1);
  const BracketLift bl = make_bracket_lift(catalog("psl", 3, F3));
  CHECK(perturb_lift(bl, AdForm::zero(7, 2, 3)).lifted == bl.lifted);
  const AdForm t = random_form(rng, 7, 2, 3);
  CHECK(perturb_lift(perturb_lift(bl, t), t.scaled(2)).lifted == bl.lifted);
  CHECK(correction_form(bl.lifted, perturb_lift(bl, t).lifted) == t);

  const BracketLift ab = make_bracket_lift(catalog("abelian", 2, F3));
  AdForm e = AdForm::zero(2, 2, 3);
  e.coords()[0] = 1;  // (e0 ^ e1)* (x) e0
  const BracketLift pb = perturb_lift(ab, e);
  CHECK(pb.lifted.constant(0, 1, 0) == 3);
  CHECK(pb.lifted.constant(1, 0, 0) == 6);
}

TEST_CASE("jacobiator") {
  CHECK(jacobiator(make_bracket_lift(catalog("heisenberg", 5, F5))).is_zero());
  const LieAlgebra sl3 = catalog("sl", 3, F5);
  const AdForm js = jacobiator(make_bracket_lift(sl3));
  CHECK_FALSE(js.is_zero());
  CHECK(is_coboundary(sl3, js).has_value());
  const AdForm j = jacobiator(make_bracket_lift(catalog("psl", 3, F3)));
  CHECK_FALSE(j.is_zero());
  CHECK(apply_differential(catalog("psl", 3, F3), j).is_zero());
  // a genuine Lie algebra over R_{k+1}, viewed as a lift of its reduction
  const LieAlgebra s9 = catalog("sl", 3, RingSpec::padic(3, 2));
  CHECK(jacobiator(BracketLift{reduce_algebra(s9), s9.as_bracket_algebra()}).is_zero());
}

TEST_CASE("dJ = 0 and J' = J - dt over randomized lifts") {
  std::mt19937_64 rng(17);
  std::size_t tested = 0;
  for (std::uint64_t p : {2, 3}) {
    const RingSpec f = RingSpec::padic(p, 1);
    std::vector<LieAlgebra> bases{catalog("heisenberg", 3, f), catalog("sl", 2, f), catalog("sl", 3, f),
                                  catalog("nilpotent-triangular", 3, f)};
    if (p == 3) bases.push_back(catalog("psl", 3, f));
    for (const auto& base : bases) {
      const BracketLift bl = make_bracket_lift(base);
      const AdForm j = jacobiator(bl);
      for (int trial = 0; trial < 25; ++trial) {
        const AdForm t = random_form(rng, base.dim(), 2, p);
        const AdForm jt = jacobiator(perturb_lift(bl, t));  // asserts dJ' = 0
        CHECK(jt == j - apply_differential(base, t));
        const auto eta = is_coboundary(base, j - jt);
        REQUIRE(eta);
        CHECK(apply_differential(base, *eta) == apply_differential(base, t));
        ++tested;
      }
    }
  }
  CHECK(tested >= 200);
}

TEST_CASE("obstruction") {
  const auto sl = obstruction(catalog("sl", 2, F5));
  CHECK(sl.lifts());
  REQUIRE(sl.lifted);
  CHECK(sl.lifted->as_bracket_algebra().satisfies_jacobi());
  CHECK(obstruction(catalog("heisenberg", 3, F5)).witness->is_zero());
  const auto psl = obstruction(catalog("psl", 3, F3));
  CHECK_FALSE(psl.lifts());
  CHECK_FALSE(psl.witness);
  REQUIRE(psl.class_coordinates);
  CHECK(std::any_of(psl.class_coordinates->begin(), psl.class_coordinates->end(), [](auto x) { return x != 0; }));
}

TEST_CASE("witness-corrected lift satisfies Jacobi exactly") {
  // A perturbed lift of heisenberg has nonzero J that is a coboundary.
  std::mt19937_64 rng(23);
  const LieAlgebra base = catalog("sl", 3, F3);
  for (int trial = 0; trial < 5; ++trial) {
    const BracketLift bl = perturb_lift(make_bracket_lift(base), random_form(rng, 8, 2, 3));
    const AdForm j = jacobiator(bl);
    const auto w = is_coboundary(base, j);
    REQUIRE(w);
    CHECK(perturb_lift(bl, *w).lifted.satisfies_jacobi());
  }
}

TEST_CASE("correction space dimension matches {t : dt = J}") {
  const LieAlgebra h = catalog("heisenberg", 3, F2);
  const auto dim = correction_space_dimension(make_bracket_lift(h));
  REQUIRE(dim);
  CHECK(*dim == 8);
  CHECK_FALSE(correction_space_dimension(make_bracket_lift(catalog("psl", 3, F3))));
}

TEST_CASE("split-ring obstructions vanish") {
  for (std::uint64_t p : {2, 3}) {
    std::vector<std::pair<std::string, std::size_t>> names{
        {"abelian", 3}, {"heisenberg", 3}, {"sl", 2}, {"sl", 3}, {"nilpotent-triangular", 3}};
    if (p == 3) names.emplace_back("psl", 3);
    for (const auto& [name, n] : names) {
      const LieAlgebra r = catalog(name, n, RingSpec::power_series(p, 1));
      for (unsigned k : {1u, 2u, 3u}) CHECK(obstruction(extend_by_section(r, k)).lifts());
    }
  }
  CHECK_THROWS_AS(extend_by_section(catalog("sl", 2, F3), 2), InputError);
}

TEST_CASE("lift family") {
  const auto ab = lift_family(catalog("abelian", 2, F3));
  REQUIRE(ab);
  CHECK(ab->h2_dim == 2);
  CHECK(ab->member_count == 9);
  CHECK(ab->members.size() == 9);
  for (const auto& [coords, m] : ab->members) CHECK(reduce_algebra(m) == catalog("abelian", 2, F3));

  const auto s = lift_family(catalog("sl", 2, F5));
  REQUIRE(s);
  CHECK(s->member_count == 1);

  CHECK_FALSE(lift_family(catalog("psl", 3, F3)));

  const auto big = lift_family(catalog("abelian", 4, F5));  // dim H^2 = 24
  REQUIRE(big);
  CHECK_FALSE(big->materialized);
  CHECK(big->members.empty());
}

TEST_CASE("psi automorphism") {
  std::mt19937_64 rng(31);
  const RingSpec r = RingSpec::padic(3, 2);
  CHECK(psi_automorphism(r, AdForm::zero(3, 1, 3)) == ModuleMap::identity(r, 3));
  for (int t = 0; t < 20; ++t) {
    const AdForm phi = random_form(rng, 4, 1, 3);
    CHECK(psi_automorphism(r, phi).compose(psi_automorphism_inverse(r, phi)) == ModuleMap::identity(r, 4));
    CHECK(psi_automorphism_inverse(r, phi).compose(psi_automorphism(r, phi)) == ModuleMap::identity(r, 4));
  }
}

TEST_CASE("Psi conjugation identity for arbitrary phi") {
  // [Psi x, Psi y]_2 - Psi [x,y]_1 = psi((<>_2 - <>_1 + d phi)(x, y))
  std::mt19937_64 rng(37);
  const LieAlgebra base = catalog("heisenberg", 3, F3);
  const auto family = lift_family(base);
  REQUIRE(family);
  const std::uint64_t pk = 3;
  for (int t = 0; t < 20; ++t) {
    const auto& l1 = family->members[rng() % family->members.size()].second;
    const auto& l2 = family->members[rng() % family->members.size()].second;
    const AdForm phi = random_form(rng, 3, 1, 3);
    const ModuleMap psi = psi_automorphism(l1.ring(), phi);
    const AdForm delta = correction_form(l1.as_bracket_algebra(), l2.as_bracket_algebra()) + apply_differential(base, phi);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const Coords lhs = l2.bracket(psi.apply(basis_vector(3, i)), psi.apply(basis_vector(3, j)));
        const Coords rhs = psi.apply(l1.basis_bracket(i, j));
        const Coords val = evaluate_form(delta, {basis_vector(3, i), basis_vector(3, j)});
        for (std::size_t m = 0; m < 3; ++m) CHECK(l1.ring().sub(lhs[m], rhs[m]) == val[m] * pk);
      }
    }
  }
}

TEST_CASE("lifts_equivalent") {
  std::mt19937_64 rng(41);
  const LieAlgebra base = catalog("sl", 3, F3);
  const LieAlgebra l1 = *obstruction(base).lifted;
  const auto same = lifts_equivalent(l1, l1);
  REQUIRE(same);
  CHECK(apply_differential(base, *same).is_zero());

  for (int t = 0; t < 5; ++t) {
    const AdForm phi0 = random_form(rng, 8, 1, 3);
    const BracketLift moved = perturb_lift(BracketLift{base, l1.as_bracket_algebra()},
                                           apply_differential(base, phi0).scaled(2));
    const auto phi = lifts_equivalent(l1, LieAlgebra(moved.lifted));
    REQUIRE(phi);
    CHECK(apply_differential(base, *phi) == apply_differential(base, phi0));
  }

  const auto ab = lift_family(catalog("abelian", 2, F3));
  for (std::size_t a = 0; a < ab->members.size(); ++a) {
    for (std::size_t b = 0; b < ab->members.size(); ++b) {
      CHECK(lifts_equivalent(ab->members[a].second, ab->members[b].second).has_value() == (a == b));
    }
  }
  CHECK_THROWS_WITH_AS(lifts_equivalent(l1, *obstruction(catalog("abelian", 8, F3)).lifted),
                       "lifts of different bases", InputError);
}

TEST_CASE("lift tower") {
  const TowerReport sl = lift_tower(catalog("sl", 2, F3), 4);
  CHECK(sl.success());
  CHECK(sl.top.ring() == RingSpec::padic(3, 4));
  for (const auto& s : sl.steps) CHECK(s.witness.has_value());
  CHECK(reduce_algebra(reduce_algebra(reduce_algebra(sl.top))) == catalog("sl", 2, F3));
  const TowerReport psl = lift_tower(catalog("psl", 3, F3), 2);
  CHECK_FALSE(psl.success());
  CHECK(psl.reached_level == 1);
  REQUIRE(psl.steps.size() == 1);
  CHECK(psl.steps[0].class_coordinates);
  CHECK(lift_tower(catalog("heisenberg", 3, F2), 5).success());
  CHECK_THROWS_AS(lift_tower(catalog("sl", 2, RingSpec::padic(3, 2)), 3), InputError);
}
