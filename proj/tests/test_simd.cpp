#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ekr/simd/bitkernels.hpp"

using namespace ekr::simd;

namespace {

void check_equivalent(const BitKernels& ref, const BitKernels& alt) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 64u, 129u}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint64_t> a(n), b(n);
      // Sparse words make the subset and disjointness answers go both ways.
      const int density = trial % 4;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng();
        b[i] = rng();
        for (int d = 0; d < density; ++d) {
          a[i] &= rng();
          b[i] |= rng();
        }
      }
      if (trial % 5 == 0 && n > 0) b = a;
      std::vector<std::uint64_t> d1(n), d2(n);
      ref.and_into(d1.data(), a.data(), b.data(), n);
      alt.and_into(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      ref.andnot_into(d1.data(), a.data(), b.data(), n);
      alt.andnot_into(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      ref.or_into(d1.data(), a.data(), b.data(), n);
      alt.or_into(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      CHECK(ref.popcount(a.data(), n) == alt.popcount(a.data(), n));
      CHECK(ref.and_popcount(a.data(), b.data(), n) == alt.and_popcount(a.data(), b.data(), n));
      CHECK(ref.intersects(a.data(), b.data(), n) == alt.intersects(a.data(), b.data(), n));
      CHECK(ref.is_subset(a.data(), b.data(), n) == alt.is_subset(a.data(), b.data(), n));
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels on hand-made words") {
  const auto& k = scalar_kernels();
  std::uint64_t a[2] = {0b1011, 1ull << 63};
  std::uint64_t b[2] = {0b0110, 0};
  std::uint64_t d[2];
  k.and_into(d, a, b, 2);
  CHECK(d[0] == 0b0010);
  CHECK(d[1] == 0);
  k.andnot_into(d, a, b, 2);
  CHECK(d[0] == 0b1001);
  CHECK(k.popcount(a, 2) == 4);
  CHECK(k.and_popcount(a, b, 2) == 1);
  CHECK(k.intersects(a, b, 2));
  CHECK_FALSE(k.is_subset(a, b, 2));
  std::uint64_t c[2] = {0b0010, 0};
  CHECK(k.is_subset(c, b, 2));
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const BitKernels* avx2 = avx2_kernels();
  if (!avx2) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU");
    return;
  }
  check_equivalent(scalar_kernels(), *avx2);
}

TEST_CASE("NEON kernels match the scalar reference") {
  const BitKernels* neon = neon_kernels();
  if (!neon) {
    MESSAGE("NEON kernels unavailable on this build or CPU");
    return;
  }
  check_equivalent(scalar_kernels(), *neon);
}

TEST_CASE("active kernels match the scalar reference") {
  MESSAGE("active kernels: " << std::string(active_kernels().name));
  check_equivalent(scalar_kernels(), active_kernels());
}
