#pragma once

// Word-parallel kernels over packed 64-bit bit vectors. The scalar table is
// the reference; vector variants must agree with it bit for bit.

#include <cstddef>
#include <cstdint>

namespace ekr::simd {

struct BitKernels {
  const char* name;
  // dst[i] = a[i] & b[i]
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n);
  // dst[i] = a[i] & ~b[i]
  void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t n);
  // dst[i] = a[i] | b[i]
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                  std::size_t n);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
  // popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // (a & b) != 0
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // (a & ~b) == 0, i.e. a is a subset of b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const BitKernels& scalar_kernels();

// nullptr when the variant is not compiled in or the CPU lacks the feature.
const BitKernels* avx2_kernels();
const BitKernels* neon_kernels();

// Best available variant, chosen once. EKR_SIMD=scalar forces the reference.
const BitKernels& active_kernels();

}  // namespace ekr::simd
