#include <random>

#include "doctest.h"
#include "lieobstruct/error.hpp"
#include "lieobstruct/ring.hpp"

using namespace lieobstruct;

namespace {

RingElem padic(std::uint64_t p, unsigned k, std::uint64_t v) { return {RingSpec::padic(p, k), v}; }

RingElem series(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
  const RingSpec r = RingSpec::power_series(p, static_cast<unsigned>(coeffs.size()));
  return {r, r.from_digits(coeffs)};
}

}  // namespace

TEST_CASE("ring spec validation") {
  CHECK_THROWS_AS(RingSpec::padic(4, 1), InputError);
  CHECK_THROWS_AS(RingSpec::padic(3, 0), InputError);
  CHECK_THROWS_AS(RingSpec::padic(2, 63), InputError);
  CHECK_NOTHROW(RingSpec::padic(2, 62));
  CHECK(RingSpec::padic(3, 3).order() == 27);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("reduce_level examples") {
  CHECK(reduce_level(padic(3, 3, 20)) == padic(3, 2, 2));
  CHECK(reduce_level(padic(3, 2, 8)) == padic(3, 1, 2));
  CHECK(reduce_level(series(3, {1, 2, 1})) == series(3, {1, 2}));
  CHECK_THROWS_WITH_AS(reduce_level(padic(3, 1, 2)), "cannot reduce below residue field", InputError);
}

TEST_CASE("lambda_residue examples") {
  CHECK(lambda_residue(padic(3, 3, 20)) == padic(3, 1, 2));
  CHECK(lambda_residue(padic(3, 3, 9)) == padic(3, 1, 0));
  CHECK(lambda_residue(series(2, {1, 1})).value() == 1);
}

TEST_CASE("chi examples") {
  CHECK(chi(padic(3, 3, 18)) == padic(3, 1, 2));
  CHECK(chi(padic(3, 3, 0)) == padic(3, 1, 0));
  CHECK(chi(padic(2, 2, 2)) == padic(2, 1, 1));
  CHECK_THROWS_WITH_AS(chi(padic(3, 3, 10)), doctest::Contains("not in"), InputError);
}

TEST_CASE("psi examples") {
  CHECK(psi(padic(3, 1, 2), RingSpec::padic(3, 3)) == padic(3, 3, 18));
  CHECK(psi(padic(3, 1, 0), RingSpec::padic(3, 2)) == padic(3, 2, 0));
  CHECK(psi(padic(2, 1, 1), RingSpec::padic(2, 2)) == padic(2, 2, 2));
}

TEST_CASE("chi/psi inverse identities and lambda o psi = 0, exhaustive") {
  for (auto family : {RingFamily::PadicQuotient, RingFamily::PowerSeriesQuotient}) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned k : {1u, 2u, 3u}) {
        const RingSpec top(family, p, k + 1);
        const RingSpec f(family, p, 1);
        for (std::uint64_t c = 0; c < p; ++c) {
          const RingElem pc = psi(RingElem(f, c), top);
          CHECK(chi(pc).value() == c);
          CHECK(lambda_residue(pc).is_zero());
        }
        const std::uint64_t pk = top.prime_power(k);
        for (std::uint64_t x = 0; x < top.order(); x += pk) {
          const RingElem e(top, x);
          CHECK(psi(chi(e), top) == e);
        }
        for (std::uint64_t a = 0; a < p; ++a) {
          for (std::uint64_t b = 0; b < p; ++b) {
            CHECK(psi(RingElem(f, a), top) + psi(RingElem(f, b), top) == psi(RingElem(f, a) + RingElem(f, b), top));
          }
          for (std::uint64_t r = 0; r < top.order(); ++r) {
            const RingElem lhs = RingElem(top, r) * psi(RingElem(f, a), top);
            CHECK(lhs == psi(lambda_residue(RingElem(top, r)) * RingElem(f, a), top));
          }
        }
      }
    }
  }
}

TEST_CASE("reduce_level is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (auto family : {RingFamily::PadicQuotient, RingFamily::PowerSeriesQuotient}) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned k : {2u, 3u, 4u}) {
        const RingSpec r(family, p, k);
        std::uniform_int_distribution<std::uint64_t> pick(0, r.order() - 1);
        for (int t = 0; t < 10000; ++t) {
          const RingElem a(r, pick(rng)), b(r, pick(rng));
          CHECK(reduce_level(a + b) == reduce_level(a) + reduce_level(b));
          CHECK(reduce_level(a * b) == reduce_level(a) * reduce_level(b));
        }
      }
    }
  }
}

TEST_CASE("ring axioms spot checks") {
  std::mt19937_64 rng(11);
  for (auto family : {RingFamily::PadicQuotient, RingFamily::PowerSeriesQuotient}) {
    const RingSpec r(family, 3, 3);
    std::uniform_int_distribution<std::uint64_t> pick(0, r.order() - 1);
    for (int t = 0; t < 2000; ++t) {
      const RingElem a(r, pick(rng)), b(r, pick(rng)), c(r, pick(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == RingElem(r, 0));
      CHECK(a + (-a) == RingElem(r, 0));
    }
  }
}

TEST_CASE("power-series arithmetic is polynomial arithmetic mod x^k") {
  // (1 + x)(1 + x) = 1 + 2x + x^2 over F_3[x]/(x^3)
  CHECK(series(3, {1, 1, 0}) * series(3, {1, 1, 0}) == series(3, {1, 2, 1}));
  // x * x^2 = 0
  CHECK((series(3, {0, 1, 0}) * series(3, {0, 0, 1})).is_zero());
  // characteristic p: 1 + 1 = 0 over F_2[x]/(x^2)
  CHECK((series(2, {1, 0}) + series(2, {1, 0})).is_zero());
  CHECK(RingSpec::power_series(2, 2).from_int(3) == 1);
  CHECK(RingSpec::padic(2, 2).from_int(3) == 3);
  CHECK(RingSpec::padic(3, 2).from_int(-1) == 8);
}

TEST_CASE("split section is a right inverse of reduction") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned k : {1u, 2u, 3u}) {
      const RingSpec r = RingSpec::power_series(p, k);
      for (std::uint64_t v = 0; v < r.order(); ++v) {
        const RingElem x(r, v);
        CHECK(reduce_level(split_section(x)) == x);
      }
      for (std::uint64_t a = 0; a < r.order(); ++a) {
        for (std::uint64_t b = 0; b < r.order(); ++b) {
          const RingElem x(r, a), y(r, b);
          CHECK(split_section(x + y) == split_section(x) + split_section(y));
          if (k == 1) CHECK(split_section(x * y) == split_section(x) * split_section(y));
        }
      }
    }
  }
  CHECK_THROWS_AS(split_section(padic(3, 1, 1)), InputError);
}

TEST_CASE("mixed rings are rejected") {
  CHECK_THROWS_AS(padic(3, 1, 1) + padic(3, 2, 1), InputError);
  CHECK_THROWS_AS(RingElem(RingSpec::padic(3, 2), 9), InputError);
}
