#include <atomic>
#include <cstdlib>
#include <string>

#include "lieobstruct/error.hpp"
#include "lieobstruct/fp_kernels.hpp"

namespace lieobstruct::kernels {

namespace {

const ModKernels kScalar{Isa::Scalar, &detail::axpy_scalar, &detail::scale_scalar};

#if defined(LIEOBSTRUCT_HAVE_AVX2)
const ModKernels kAvx2{Isa::Avx2, &detail::axpy_avx2, &detail::scale_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const ModKernels* initial_kernels() {
  if (const char* env = std::getenv("LIEOBSTRUCT_ISA"); env != nullptr && std::string(env) == "scalar") {
    return &kScalar;
  }
  if (const ModKernels* k = avx2_kernels()) return k;
  return &kScalar;
}

std::atomic<const ModKernels*>& active_slot() {
  static std::atomic<const ModKernels*> slot{initial_kernels()};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const ModKernels& scalar_kernels() { return kScalar; }

const ModKernels* avx2_kernels() {
#if defined(LIEOBSTRUCT_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

Isa detected_isa() { return avx2_kernels() != nullptr ? Isa::Avx2 : Isa::Scalar; }

const ModKernels& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) {
  const ModKernels* k = isa == Isa::Scalar ? &kScalar : avx2_kernels();
  if (k == nullptr) throw Error("kernels: " + std::string(to_string(isa)) + " is not available on this machine");
  active_slot().store(k, std::memory_order_release);
}

}  // namespace lieobstruct::kernels
