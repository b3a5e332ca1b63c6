#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "ekr/bounds.hpp"
#include "ekr/error.hpp"

namespace ekr::bounds {

namespace {

Rational frac(const BigInt& num, const BigInt& den) { return Rational(num, den); }

constexpr std::array<int, 10> kDeficitLimits = {1, 2, 3, 4, 4, 5, 6, 7, 8, 9};  // k = 4..13

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "search exceeded " + std::to_string(limit_) + " nodes");
    }
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct TupleSearch {
  long long l, s1, rhs;
  Budget budget;
  std::vector<long long> n;
  SweepCertificate* cert;

  // Chooses n_i for i = l..2 so that sum i(i-1) n_i uses up `rem` exactly.
  void choose(long long i, long long rem) {
    budget.tick();
    if (i == 2) {
      if (rem % 2 != 0) return;
      n[2] = rem / 2;
      long long weighted = 0, excess = 0;
      for (long long j = 2; j <= l; ++j) {
        weighted += j * n[j];
        excess += (j - 1) * n[j];
      }
      n[1] = s1 - weighted;
      if (n[1] < 0) return;
      ++cert->cases;
      ++cert->comparisons;
      if (excess > rhs) cert->failures.emplace_back(n.begin() + 1, n.end());
      return;
    }
    const long long w = i * (i - 1);
    for (long long c = 0; c * w <= rem; ++c) {
      n[i] = c;
      choose(i - 1, rem - c * w);
    }
    n[i] = 0;
  }
};

}  // namespace

SweepCertificate verify_tuple_maximization(long long l, long long a, long long b, long long r,
                                           std::size_t budget) {
  if (l < 2) throw Error(ErrorCode::kDomain, "needs l >= 2");
  const Rational A(a);
  const Rational lower1 = Rational(-l * (r - l - 1) + 1) - frac(BigInt(b) * r, BigInt(l + 1));
  const Rational lower2 = frac(BigInt(-b) * (b - 1), BigInt((l + 1) * l)) - Rational(2 * (b - 1));
  const Rational upper = frac(BigInt(r * l - l * l + l - 1), BigInt(l - 1)) -
                         frac(BigInt(b) * (2 * l * l + 2 * l - r + b - 1), BigInt(l * l - 1));
  if (A < lower1 || A < lower2 || A > upper) {
    throw Error(ErrorCode::kDomain, "(a, b) outside the admissible range: need " +
                                        std::max(lower1, lower2).str() + " <= a <= " +
                                        upper.str());
  }
  SweepCertificate cert;
  cert.lemma = "maximalisatie";
  cert.ranges = {{"l", std::to_string(l)},
                 {"a", std::to_string(a)},
                 {"b", std::to_string(b)},
                 {"r", std::to_string(r)}};
  const long long s1 = (a - 1) * (l + 1) + b * r + l * (l + 1) * (r - l - 1);
  const long long s2 = b * (b - 1) + l * (l + 1) * (a + 2 * b - 2);
  const long long rhs = b * (b - 1) / 2 + (a + 2 * b - 2) * (l * (l + 1) / 2);
  if (s1 < 0 || s2 < 0) return cert;
  TupleSearch search{l, s1, rhs, Budget(budget), std::vector<long long>(l + 1, 0), &cert};
  search.choose(l, s2);
  return cert;
}

int deficit_limit(int k) {
  if (k < 4 || k > 13) throw Error(ErrorCode::kDomain, "R_k is tabulated for 4 <= k <= 13");
  return kDeficitLimits[static_cast<std::size_t>(k - 4)];
}

long long deficit_limit_formula(long long k) {
  if (k < 1) throw Error(ErrorCode::kDomain, "needs k >= 1");
  const SurdExpr e{Rational(k - 1), Rational(BigInt(-3), BigInt(4)), BigInt(k)};
  return floor_of(e).convert_to<long long>();
}

SweepCertificate sweep_small_k(int k) {
  const int rk = deficit_limit(k);
  SweepCertificate cert;
  cert.lemma = "interval4";
  cert.ranges = {{"k", std::to_string(k)},
                 {"R", "0.." + std::to_string(rk)},
                 {"b", "0..floor(R(R-1)/(k-1-R))"}};
  const long long kk = k;
  auto scan = [&](long long R, std::vector<std::vector<long long>>& bad) {
    const long long bmax = R * (R - 1) / (kk - 1 - R);
    const Rational r((kk - 1) * (kk - 1) - R);
    for (long long b = 0; b <= bmax; ++b) {
      const auto rep = cover_bound_deficit(kk, R, b);
      ++cert.comparisons;
      if (!(std::get<Rational>(rep.value) < r)) bad.push_back({kk, R, b});
    }
    return bmax + 1;
  };
  for (long long R = 0; R <= rk; ++R) cert.cases += static_cast<std::size_t>(scan(R, cert.failures));
  if (rk + 1 < k - 1) scan(rk + 1, cert.boundary_violations);
  return cert;
}

BigInt deficit_discriminant(long long b, long long k) {
  const BigInt K(k), B(b);
  const BigInt t = K * K * K - 3 * K * K - 2 * B * K + 6 * K - 2;
  return t * t - 8 * K * (K - 1) * (B - 1) * (B - 2);
}

SurdExpr c_limit(long long k) {
  return SurdExpr{Rational(-2 * k), Rational(BigInt(4 * k - 6), BigInt(3)), BigInt(k)};
}

SweepCertificate sweep_large_k(long long k_min, long long k_max, CSample sample) {
  if (k_min < 14 || k_max < k_min) throw Error(ErrorCode::kDomain, "needs 14 <= k_min <= k_max");
  SweepCertificate cert;
  cert.lemma = "berekening14";
  cert.ranges = {{"k", std::to_string(k_min) + ".." + std::to_string(k_max)},
                 {"c", sample == CSample::kExhaustive ? "1..floor(C_k)"
                                                      : "{1, floor(C_k/2), floor(C_k)}"},
                 {"b", sample == CSample::kExhaustive ? "0..c" : "{0, floor(c/2), c}"}};
  for (long long k = k_min; k <= k_max; ++k) {
    const BigInt K(k);
    const BigInt lin = K * K * K - 7 * K * K + 10 * K - 2;
    const BigInt den = 4 * (K - 1);
    auto lower_end = [&](long long b) {
      const BigInt d = deficit_discriminant(b, k);
      if (d < 0) {
        throw Error(ErrorCode::kDomain, "D(" + std::to_string(b) + "," + std::to_string(k) +
                                            ") is negative");
      }
      return SurdExpr{frac(lin - 2 * BigInt(b) * K, den), frac(BigInt(-1), den), d};
    };

    // The k-only inequality.
    ++cert.cases;
    ++cert.comparisons;
    if (cmp_surd(lower_end(0), SurdExpr::rational(Rational(0))) >= 0) {
      cert.failures.push_back({k, -1, 0});
    }

    const SurdExpr ck = c_limit(k);
    const long long cmax = floor_of(ck).convert_to<long long>();
    std::set<long long> cs;
    if (sample == CSample::kExhaustive) {
      for (long long c = 1; c <= cmax; ++c) cs.insert(c);
    } else {
      cs = {1, std::max(1LL, cmax / 2), cmax};
    }
    for (long long c : cs) {
      ++cert.comparisons;
      if (c < 1 || cmp_surd(SurdExpr::rational(Rational(c)), ck) > 0) continue;
      const SurdExpr upper{frac(BigInt(1 - c), BigInt(2)), frac(BigInt(1), BigInt(2)),
                           BigInt((c - 1) * (c - 1) + 4 * c * (k - 1))};
      std::set<long long> bs;
      if (sample == CSample::kExhaustive) {
        for (long long b = 0; b <= c; ++b) bs.insert(b);
      } else {
        bs = {0, c / 2, c};
      }
      for (long long b : bs) {
        const SurdExpr lower = lower_end(b);
        ++cert.cases;
        ++cert.comparisons;
        if (cmp_double_surd(lower.a, lower.b, lower.n, upper.a, upper.b, upper.n) >= 0) {
          cert.failures.push_back({k, c, b});
        }
      }
    }
  }
  return cert;
}

std::pair<SurdExpr, SurdExpr> deficit_interval(long long k, long long c) {
  if (k < 14) throw Error(ErrorCode::kDomain, "deficit intervals need k >= 14");
  if (c < 0 || cmp_surd(SurdExpr::rational(Rational(c)), c_limit(k)) > 0) {
    throw Error(ErrorCode::kDomain, "c outside 0..C_k");
  }
  const Rational half(BigInt(1), BigInt(2));
  if (c == 0) {
    return {SurdExpr::rational(Rational(0)), SurdExpr::root(BigInt(k - 1))};
  }
  SurdExpr lo{frac(BigInt(1 - c), BigInt(2)), half, BigInt((c - 1) * (c - 1) + 4 * c * (k - 1))};
  SurdExpr hi{frac(BigInt(-c), BigInt(2)), half, BigInt(c * c + 4 * (c + 1) * (k - 1))};
  return {lo, hi};
}

std::optional<long long> locate_deficit(long long k, long long R) {
  const long long cmax = floor_of(c_limit(k)).convert_to<long long>();
  const SurdExpr x = SurdExpr::rational(Rational(R));
  for (long long c = 0; c <= cmax; ++c) {
    const auto [lo, hi] = deficit_interval(k, c);
    if (cmp_surd(lo, x) <= 0 && cmp_surd(x, hi) < 0) return c;
  }
  return std::nullopt;
}

}  // namespace ekr::bounds
