#pragma once

// Row kernels for dense elimination over F_p.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2
// variant is compiled into its own translation unit and chosen at runtime
// when the CPU supports it. The AVX2 path uses Shoup multiplication on
// 64-bit lanes and handles p < 2^31; for larger primes it forwards to the
// scalar code. Both variants produce identical outputs for canonical
// inputs (entries in [0, p)).

#include <cstdint>
#include <span>
#include <string_view>

namespace lieobstruct::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct ModKernels {
  Isa isa;
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
               std::uint64_t p);
  /// v[i] = (c * v[i]) mod p
  void (*scale)(std::span<std::uint64_t> v, std::uint64_t c, std::uint64_t p);
};

const ModKernels& scalar_kernels();

/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const ModKernels* avx2_kernels();

/// Best variant supported by this machine.
Isa detected_isa();

/// Kernels used by the linear-algebra routines. Defaults to detected_isa();
/// LIEOBSTRUCT_ISA=scalar in the environment forces the reference path.
const ModKernels& active_kernels();

/// Override the active variant (tests and benchmarks). Throws if unsupported.
void set_active_isa(Isa isa);

namespace detail {
void axpy_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
                 std::uint64_t p);
void scale_scalar(std::span<std::uint64_t> v, std::uint64_t c, std::uint64_t p);
#if defined(LIEOBSTRUCT_HAVE_AVX2)
void axpy_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
               std::uint64_t p);
void scale_avx2(std::span<std::uint64_t> v, std::uint64_t c, std::uint64_t p);
#endif
}  // namespace detail

}  // namespace lieobstruct::kernels
