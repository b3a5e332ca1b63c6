#include <doctest.h>

#include "ekr/bounds.hpp"
#include "ekr/error.hpp"

using namespace ekr;
using namespace ekr::bounds;

namespace {

Rational R(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const Rational& rat(const Value& v) { return std::get<Rational>(v); }

}  // namespace

TEST_CASE("family size bound") {
  CHECK(family_size_bound(3, 3) == 7);
  CHECK(family_size_bound(4, 4) == 13);
  for (int k = 2; k < 10; ++k) CHECK(family_size_bound(k, 1) == 1);
  CHECK_THROWS_AS(family_size_bound(4, 5), Error);
}

TEST_CASE("cover bound spot values") {
  const auto a = cover_bound(3, 6, 1);
  CHECK(rat(a.value) == R(5));
  CHECK(a.active_branch == 1);
  CHECK(rat(cover_bound(4, 9, 1).branches[0]) == R(8));
  CHECK(rat(cover_bound(4, 8, 1).branches[0]) == R(8));
  CHECK_THROWS_AS(cover_bound(2, 3, 0), Error);
  const auto d = cover_bound_deficit(13, 9, 0);
  CHECK(rat(d.value) < R(135));
}

TEST_CASE("deficit form equals the r form") {
  for (long long k = 3; k <= 20; ++k) {
    for (long long Rd = -k; Rd <= k * k; ++Rd) {
      for (long long b = 0; b <= k; ++b) {
        const auto x = cover_bound_deficit(k, Rd, b);
        const auto y = cover_bound(k, (k - 1) * (k - 1) - Rd, b);
        CHECK(rat(x.branches[0]) == rat(y.branches[0]));
        CHECK(rat(x.branches[1]) == rat(y.branches[1]));
        CHECK(rat(x.value) == rat(y.value));
      }
    }
  }
}

TEST_CASE("unital bound is the cover bound at k = q+1, r = q^2") {
  for (long long q = 2; q <= 13; ++q) {
    for (long long b = 0; b <= 5; ++b) {
      const auto u = unital_cover_bound(q, b);
      const auto c = cover_bound(q + 1, q * q, b);
      CHECK(rat(u.branches[0]) == rat(c.branches[0]));
      CHECK(rat(u.branches[1]) == rat(c.branches[1]));
      CHECK(rat(u.value) == rat(c.value));
    }
    CHECK(rat(unital_cover_bound(q, 0).branches[0]) == R(q * q - q + 1));
  }
  CHECK(rat(unital_cover_bound(3, 1).branches[0]) == R(8));
  CHECK(unital_cover_bound(4, 1).floor == 13);
}

TEST_CASE("near-pencil cover range") {
  CHECK(near_pencil_cover_range(4, 1) == std::pair{R(12), R(12)});
  CHECK(near_pencil_cover_range(4, 0) == std::pair{R(12), R(12)});
  CHECK(near_pencil_cover_range(10, 3) == std::pair{R(90), R(91)});
  CHECK_THROWS_AS(near_pencil_cover_range(4, 3), Error);
}

TEST_CASE("second-largest unital families") {
  CHECK(unital_second_largest_bound(3).floor == 8);
  CHECK(unital_second_largest_bound(4).floor == 13);
  const auto q5 = unital_second_largest_bound(5);
  CHECK(q5.floor == 22);
  CHECK(std::holds_alternative<CubeRootExpr>(q5.value));
  REQUIRE(q5.brackets.size() == 2);
  CHECK(q5.brackets[0].floor_root == 1);
  CHECK(q5.brackets[1].floor_root == 2);
  // 21 + 2 - (2/3)*2 <= value < 21 + 3 - (2/3)*1 from the brackets.
  CHECK(approx(q5.value) > 21 + 2 - 4.0 / 3);
  CHECK(approx(q5.value) < 21 + 3 - 2.0 / 3);
  for (long long q = 3; q <= 13; ++q) {
    CHECK(unital_near_pencil_bound(q) <= unital_second_largest_bound(q).floor);
    CHECK(unital_second_largest_bound(q).floor < q * q);
  }
}

TEST_CASE("verdicts") {
  CHECK(large_r_verdict(4, 13) == LargeRVerdict::kBoundHolds);
  CHECK(large_r_verdict(4, 14) == LargeRVerdict::kBoundAndUniqueness);
  CHECK(large_r_verdict(4, 12) == LargeRVerdict::kBelow);
  CHECK(pencil_classification_verdict(4, 8) == ClassificationVerdict::kBoundOnly);
  CHECK(pencil_classification_verdict(4, 9) == ClassificationVerdict::kClassified);
  CHECK(pencil_classification_verdict(4, 7) == ClassificationVerdict::kOutside);
  CHECK(pencil_classification_verdict(4, 13) == ClassificationVerdict::kOutside);
  CHECK(pencil_bound_by_v(3, 19));
  CHECK_FALSE(pencil_bound_by_v(3, 18));
  CHECK(pencil_bound_by_v(4, 49));
}

TEST_CASE("deficit limits") {
  for (int k = 4; k <= 13; ++k) CHECK(deficit_limit(k) == deficit_limit_formula(k));
  CHECK_THROWS_AS(deficit_limit(14), Error);
}

TEST_CASE("small-k sweep") {
  const auto c4 = sweep_small_k(4);
  CHECK(c4.certified());
  CHECK(c4.cases == 2);
  CHECK_FALSE(c4.boundary_violations.empty());
  for (int k = 4; k <= 13; ++k) {
    const auto c = sweep_small_k(k);
    CHECK(c.certified());
    CHECK_FALSE(c.boundary_violations.empty());
  }
}

TEST_CASE("large-k sweep and intervals") {
  const long long k = 14;
  const BigInt t = BigInt(k * k * k - 3 * k * k + 6 * k - 2);
  CHECK(deficit_discriminant(0, k) == t * t - 16 * k * (k - 1));
  CHECK(deficit_discriminant(0, k) > 0);
  const auto cert = sweep_large_k();
  CHECK(cert.certified());
  CHECK(cert.cases > 0);
  const auto one = sweep_large_k(14, 14, CSample::kExhaustive);
  CHECK(one.certified());
  CHECK(floor_of(c_limit(14)) == 34);

  CHECK(locate_deficit(14, 0) == 0);
  CHECK(locate_deficit(14, 3) == 0);
  for (long long c = 1; c <= 10; ++c) {
    CHECK(cmp_surd(deficit_interval(k, c).second, deficit_interval(k, c + 1).first) ==
          std::strong_ordering::equal);
  }
  CHECK(cmp_surd(deficit_interval(k, 0).second, deficit_interval(k, 1).first) ==
        std::strong_ordering::equal);
  CHECK_THROWS_AS(deficit_interval(13, 0), Error);
}

TEST_CASE("tuple maximization search") {
  const auto c = verify_tuple_maximization(2, 1, 1, 5);
  CHECK(c.certified());
  CHECK(c.cases == 1);
  CHECK_THROWS_AS(verify_tuple_maximization(2, 100, 0, 5), Error);
  // a = 2 is the lower end of the admissible range for (l, b, r) = (3, 0, 9).
  CHECK_THROWS_AS(verify_tuple_maximization(3, 1, 0, 9), Error);
  const auto l3 = verify_tuple_maximization(3, 2, 0, 9);
  CHECK(l3.certified());
  ErrorCode code = ErrorCode::kDomain;
  try {
    verify_tuple_maximization(3, 2, 0, 9, 1);
  } catch (const Error& e) {
    code = e.code();
  }
  CHECK(code == ErrorCode::kBudgetExceeded);
}
