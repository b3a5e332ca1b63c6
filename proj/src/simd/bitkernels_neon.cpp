#include <arm_neon.h>

#include "ekr/simd/bitkernels.hpp"

namespace ekr::simd {

namespace {

inline std::size_t lane_popcount(uint64x2_t v) {
  const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
  return static_cast<std::size_t>(vaddvq_u8(bytes));
}

void and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0, i = 0;
  for (; i + 2 <= n; i += 2) c += lane_popcount(vld1q_u64(a + i));
  for (; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return c;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t c = 0, i = 0;
  for (; i + 2 <= n; i += 2) c += lane_popcount(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))))) {
      return true;
    }
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i))))) {
      return false;
    }
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace

namespace detail {

const BitKernels& neon_table() {
  static const BitKernels k{"neon",   and_into,     andnot_into, or_into,
                            popcount, and_popcount, intersects,  is_subset};
  return k;
}

}  // namespace detail

}  // namespace ekr::simd
