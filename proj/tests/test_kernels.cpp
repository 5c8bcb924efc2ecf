#include <random>
#include <vector>

#include "doctest.h"
#include "lieobstruct/catalog.hpp"
#include "lieobstruct/ce_complex.hpp"
#include "lieobstruct/fp_kernels.hpp"

using namespace lieobstruct;
namespace k = lieobstruct::kernels;

namespace {

std::vector<std::uint64_t> random_vec(std::mt19937_64& rng, std::size_t n, std::uint64_t p) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

struct IsaGuard {
  k::Isa saved = k::active_kernels().isa;
  ~IsaGuard() { k::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match the definition") {
  const std::uint64_t p = 1'000'000'007;
  std::vector<std::uint64_t> dst{1, 2, p - 1}, src{p - 1, 5, p - 1};
  k::detail::axpy_scalar(dst, src, 3, p);
  CHECK(dst == std::vector<std::uint64_t>{p - 2, 17, p - 4});
  k::detail::scale_scalar(dst, p - 1, p);
  CHECK(dst == std::vector<std::uint64_t>{2, p - 17, 4});
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  const k::ModKernels* avx = k::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 65'521ULL, 2'147'483'647ULL, 4'294'967'311ULL, (1ULL << 61) - 1}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 245u}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto a = random_vec(rng, n, p), b = random_vec(rng, n, p);
        const std::uint64_t c = random_vec(rng, 1, p)[0];
        auto ref = a;
        k::scalar_kernels().axpy(ref, b, c, p);
        avx->axpy(a, b, c, p);
        CHECK(a == ref);
        auto s1 = b, s2 = b;
        k::scalar_kernels().scale(s1, c, p);
        avx->scale(s2, c, p);
        CHECK(s1 == s2);
      }
    }
  }
}

TEST_CASE("cohomology is identical under both kernel variants") {
  IsaGuard guard;
  const LieAlgebra psl = catalog("psl", 3, RingSpec::padic(3, 1));
  k::set_active_isa(k::Isa::Scalar);
  const auto scalar_dims = cohomology(psl, Coefficients::Adjoint).dims();
  const auto scalar_reps = degree_cohomology(psl, 3, Coefficients::Adjoint).representatives;
  if (k::avx2_kernels() == nullptr) return;
  k::set_active_isa(k::Isa::Avx2);
  CHECK(cohomology(psl, Coefficients::Adjoint).dims() == scalar_dims);
  CHECK(degree_cohomology(psl, 3, Coefficients::Adjoint).representatives == scalar_reps);
}

TEST_CASE("detected isa is reported") {
  CHECK((k::to_string(k::detected_isa()) == "scalar" || k::to_string(k::detected_isa()) == "avx2"));
}
