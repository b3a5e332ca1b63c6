#include "ekr/bounds.hpp"

#include <algorithm>
#include <string>

#include "ekr/error.hpp"

namespace ekr::bounds {

namespace {

Rational frac(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }
Rational Q(long long v) { return Rational(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kDomain, what);
}

BoundReport two_branch(FormulaId id, std::vector<std::pair<std::string, long long>> inputs,
                       Rational first, Rational second) {
  BoundReport rep;
  rep.formula = id;
  rep.inputs = std::move(inputs);
  rep.active_branch = first >= second ? 1 : 2;
  rep.value = rep.active_branch == 1 ? first : second;
  rep.floor = std::get<Rational>(rep.value).floor();
  rep.branches = {std::move(first), std::move(second)};
  return rep;
}

}  // namespace

BigInt floor_value(const Value& value) {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.floor();
        } else {
          return floor_of(v);
        }
      },
      value);
}

double approx(const Value& value) {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.to_double();
        } else {
          return v.approx();
        }
      },
      value);
}

const char* formula_key(FormulaId id) {
  switch (id) {
    case FormulaId::kFamilySize: return "family-size";
    case FormulaId::kCover: return "mainlemma";
    case FormulaId::kCoverDeficit: return "mainlemmaR";
    case FormulaId::kNearPencilCover: return "cover-range";
    case FormulaId::kUnitalCover: return "unital-mainlemma";
    case FormulaId::kUnitalSecondLargest: return "unital-second-largest";
  }
  return "unknown";
}

long long family_size_bound(int k, int k_s) {
  require(k >= 2, "family size bound needs k >= 2");
  require(k_s >= 1 && k_s <= k, "family size bound needs 1 <= k_S <= k");
  return static_cast<long long>(k_s) * k - k + 1;
}

BoundReport cover_bound(long long k, long long r, long long b) {
  require(k >= 3, "cover bound needs k >= 3");
  const long long kk = k * k;
  Rational first = Q(kk - k + 1) - frac(2 * (r - k) * (kk - k + 1 - r), k * (k - 2)) +
                   frac(b * (b - 1), (k - 1) * (k - 2)) +
                   frac(2 * (b - 1) * (kk - k - r), (k - 1) * (k - 2));
  Rational second =
      Q(kk - r) - frac(r - 1, k - 2) + frac(b * (b - 1 - r + 2 * k * (k - 1)), k * (k - 2));
  return two_branch(FormulaId::kCover, {{"k", k}, {"r", r}, {"b", b}}, std::move(first),
                    std::move(second));
}

BoundReport cover_bound_deficit(long long k, long long R, long long b) {
  require(k >= 3, "cover bound needs k >= 3");
  const long long kk = k * k;
  Rational first = Q(kk - k + 1) - frac(2 * (kk - 3 * k + 1 - R) * (k + R), k * (k - 2)) +
                   frac(b * (b - 1), (k - 1) * (k - 2)) +
                   frac(2 * (b - 1) * (k - 1 + R), (k - 1) * (k - 2));
  Rational second = Q(k - 1 + R) + frac(R, k - 2) + frac(b * (b + kk + R - 2), k * (k - 2));
  return two_branch(FormulaId::kCoverDeficit, {{"k", k}, {"R", R}, {"b", b}}, std::move(first),
                    std::move(second));
}

std::pair<Rational, Rational> near_pencil_cover_range(long long k, long long a_prime) {
  require(k >= 2, "cover range needs k >= 2");
  require(a_prime >= 0 && a_prime < k - 1, "cover range needs 0 <= a' < k-1");
  const Rational low = Q(k * (k - 1));
  return {low, low + frac(a_prime * a_prime - a_prime, k - 1 - a_prime)};
}

BoundReport unital_cover_bound(long long q, long long b) {
  require(q >= 2, "unital bound needs q >= 2");
  Rational first = Q(q * q - q + 1) + frac(b * (b - 1), q * (q - 1)) + frac(2 * b, q - 1);
  Rational second = Q(q) + frac(b * q * (q + 2), q * q - 1) + frac(b * (b - 1), q * q - 1);
  return two_branch(FormulaId::kUnitalCover, {{"q", q}, {"b", b}}, std::move(first),
                    std::move(second));
}

long long unital_near_pencil_bound(long long q) {
  require(q >= 2, "unital bound needs q >= 2");
  const BigInt Q1(q);
  for (long long a = 0; a < q; ++a) {
    const BigInt A(a);
    const BigInt lhs1 = Q1 * (Q1 - A - 1) * (Q1 - A) * (Q1 - A) * (Q1 - 1);
    const BigInt rhs1 = A * (A - 1) * (2 * Q1 * Q1 - 2 * Q1 * A + A * A - Q1);
    const BigInt lhs2 = (Q1 * Q1 - Q1 - A) * (Q1 - A) * (Q1 - A) * (Q1 * Q1 - 1);
    const BigInt rhs2 =
        A * (A - 1) * (Q1 * Q1 * Q1 - (A - 2) * Q1 * Q1 - (2 * A + 1) * Q1 + A * A);
    if (lhs1 <= rhs1 || lhs2 <= rhs2) return q * q - a;
  }
  return q * q - q;
}

BoundReport unital_second_largest_bound(long long q) {
  require(q >= 3, "second-largest unital bound needs q >= 3");
  BoundReport rep;
  rep.formula = FormulaId::kUnitalSecondLargest;
  rep.inputs = {{"q", q}};
  // Busiest point on q+1 members: the cover bound at b = 1.
  const Rational full = std::get<Rational>(unital_cover_bound(q, 1).value);
  if (q <= 4) {
    const BigInt a = full.floor();
    const BigInt c(unital_near_pencil_bound(q));
    rep.branches = {Rational::from_int(a), Rational::from_int(c)};
    rep.active_branch = a >= c ? 1 : 2;
    rep.value = Rational::from_int(std::max(a, c));
    rep.floor = std::max(a, c);
    return rep;
  }
  // Busiest point on q members: q^2 - q + 1 + cbrt(q^2) - (2/3)cbrt(q).
  CubeRootExpr cube{Q(q * q - q + 1), frac(-2, 3), Q(1), BigInt(q)};
  CubeRootExpr diff = cube;
  diff.c0 -= full;
  rep.active_branch = diff.sign() > 0 ? 2 : 1;
  if (rep.active_branch == 2) {
    rep.value = cube;
  } else {
    rep.value = full;
  }
  rep.floor = floor_value(rep.value);
  rep.branches = {full, cube};
  rep.brackets = {iroot_floor(BigInt(q), 3), iroot_floor(BigInt(q * q), 3)};
  return rep;
}

const char* verdict_name(LargeRVerdict v) {
  switch (v) {
    case LargeRVerdict::kBoundAndUniqueness: return "BoundAndUniqueness";
    case LargeRVerdict::kBoundHolds: return "BoundHolds";
    case LargeRVerdict::kBelow: return "Below";
  }
  return "unknown";
}

const char* verdict_name(ClassificationVerdict v) {
  switch (v) {
    case ClassificationVerdict::kClassified: return "Classified";
    case ClassificationVerdict::kBoundOnly: return "BoundOnly";
    case ClassificationVerdict::kOutside: return "Outside";
  }
  return "unknown";
}

LargeRVerdict large_r_verdict(long long k, long long r) {
  require(k >= 2, "needs k >= 2");
  const long long t = k * k - k + 1;
  if (r > t) return LargeRVerdict::kBoundAndUniqueness;
  if (r == t) return LargeRVerdict::kBoundHolds;
  return LargeRVerdict::kBelow;
}

ClassificationVerdict pencil_classification_verdict(long long k, long long r) {
  require(k >= 4, "needs k >= 4");
  const SurdExpr threshold{Q(k * k - 3 * k + 2), frac(3, 4), BigInt(k)};
  const bool inside =
      r <= k * k - k && cmp_surd(SurdExpr::rational(Q(r)), threshold) >= 0;
  if (!inside) return ClassificationVerdict::kOutside;
  if (r == 8 && k == 4) return ClassificationVerdict::kBoundOnly;
  return ClassificationVerdict::kClassified;
}

bool pencil_bound_by_v(long long k, long long v) {
  require(k >= 2, "needs k >= 2");
  return v >= 1 + k * k * (k - 1);
}

}  // namespace ekr::bounds
