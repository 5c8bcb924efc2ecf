// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "lieobstruct/fp_kernels.hpp"

namespace lieobstruct::kernels::detail {

namespace {

constexpr std::uint64_t kShoupLimit = std::uint64_t{1} << 31;

// Shoup precomputation: floor(c * 2^32 / p), valid for c < p < 2^31.
inline std::uint64_t shoup_factor(std::uint64_t c, std::uint64_t p) { return (c << 32) / p; }

// c * x mod p for four lanes with x < p. Result in [0, p).
inline __m256i mulmod_shoup(__m256i x, __m256i c, __m256i c_shoup, __m256i p) {
  const __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, c_shoup), 32);
  __m256i r = _mm256_sub_epi64(_mm256_mul_epu32(x, c), _mm256_mul_epu32(q, p));
  // r in [0, 2p): subtract p where !(p > r)
  return _mm256_sub_epi64(r, _mm256_andnot_si256(_mm256_cmpgt_epi64(p, r), p));
}

}  // namespace

void axpy_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
               std::uint64_t p) {
  if (c == 0) return;
  if (p >= kShoupLimit) {
    axpy_scalar(dst, src, c, p);
    return;
  }
  const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(shoup_factor(c, p)));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_add_epi64(d, mulmod_shoup(x, vc, vs, vp));
    s = _mm256_sub_epi64(s, _mm256_andnot_si256(_mm256_cmpgt_epi64(vp, s), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), s);
  }
  if (i < n) axpy_scalar(dst.subspan(i), src.subspan(i), c, p);
}

void scale_avx2(std::span<std::uint64_t> v, std::uint64_t c, std::uint64_t p) {
  if (p >= kShoupLimit) {
    scale_scalar(v, c, p);
    return;
  }
  const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(shoup_factor(c, p)));
  const std::size_t n = v.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* ptr = reinterpret_cast<__m256i*>(v.data() + i);
    _mm256_storeu_si256(ptr, mulmod_shoup(_mm256_loadu_si256(ptr), vc, vs, vp));
  }
  if (i < n) scale_scalar(v.subspan(i), c, p);
}

}  // namespace lieobstruct::kernels::detail
