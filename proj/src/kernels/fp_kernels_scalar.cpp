#include "lieobstruct/fp_kernels.hpp"

namespace lieobstruct::kernels::detail {

using u128 = unsigned __int128;

void axpy_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t c,
                 std::uint64_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint64_t>((dst[i] + static_cast<u128>(c) * src[i]) % p);
  }
}

void scale_scalar(std::span<std::uint64_t> v, std::uint64_t c, std::uint64_t p) {
  for (auto& x : v) x = static_cast<std::uint64_t>(static_cast<u128>(c) * x % p);
}

}  // namespace lieobstruct::kernels::detail
