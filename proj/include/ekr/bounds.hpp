#pragma once

// Upper bounds on intersecting block families and the threshold sweeps that
// certify them. All evaluation is exact; floors come from exact comparisons.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ekr/exactnum.hpp"

namespace ekr::bounds {

using Value = std::variant<Rational, SurdExpr, CubeRootExpr>;

BigInt floor_value(const Value& value);
double approx(const Value& value);

enum class FormulaId {
  kFamilySize,           // k_S*k - k + 1
  kCover,                // bound from |P'| = k(k-1) + b and r
  kCoverDeficit,         // same bound written in R = (k-1)^2 - r
  kNearPencilCover,      // |P'| range when k_S = k-1
  kUnitalCover,          // cover bound specialised to unitals
  kUnitalSecondLargest,  // largest non-pencil maximal family in a unital
};

// Short identifier used by the CLI and in JSON output.
const char* formula_key(FormulaId id);

struct BoundReport {
  FormulaId formula = FormulaId::kCover;
  std::vector<std::pair<std::string, long long>> inputs;
  Value value;
  BigInt floor;
  int active_branch = 0;  // 1-based index into branches; 0 for single formulas
  std::vector<Value> branches;
  std::vector<RootBracket> brackets;
};

// |S| <= k_s*k - k + 1 for a family whose busiest covered point is on k_s
// members. Requires k >= 2 and 1 <= k_s <= k.
long long family_size_bound(int k, int k_s);

// Bound on an intersecting family covering k(k-1) + b points in a design with
// replication number r. Requires k >= 3.
BoundReport cover_bound(long long k, long long r, long long b);
BoundReport cover_bound_deficit(long long k, long long R, long long b);

// [k(k-1), k(k-1) + (a^2 - a)/(k-1-a)] for a = (k-1)^2 - |S|, 0 <= a < k-1.
std::pair<Rational, Rational> near_pencil_cover_range(long long k, long long a_prime);

// Unital of order q: the cover bound at k = q+1, r = q^2.
BoundReport unital_cover_bound(long long q, long long b);
// Largest q^2 - a' compatible with the k_S = q case, found by integer search.
long long unital_near_pencil_bound(long long q);
// Bound on maximal families other than pencils in a unital of order q >= 3.
BoundReport unital_second_largest_bound(long long q);

enum class LargeRVerdict { kBoundAndUniqueness, kBoundHolds, kBelow };
enum class ClassificationVerdict { kClassified, kBoundOnly, kOutside };
const char* verdict_name(LargeRVerdict v);
const char* verdict_name(ClassificationVerdict v);

// r > k^2-k+1: every family has at most r blocks and size r forces a pencil.
// r = k^2-k+1: the size bound only.
LargeRVerdict large_r_verdict(long long k, long long r);
// k^2-k >= r >= k^2-3k+2+(3/4)sqrt(k): size r forces a pencil, except at
// (r, k) = (8, 4) where only the bound holds. Requires k >= 4.
ClassificationVerdict pencil_classification_verdict(long long k, long long r);
// v >= 1 + k^2(k-1). Requires k >= 2.
bool pencil_bound_by_v(long long k, long long v);

// --- sweeps ---

struct SweepCertificate {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> ranges;
  std::size_t cases = 0;
  std::size_t comparisons = 0;                    // exact comparisons performed
  std::vector<std::vector<long long>> failures;   // counterexample inputs
  // Only for the small-k sweep: (R, b) pairs at R = R_k + 1 where the bound
  // is not below r. Nonempty means R_k cannot be enlarged.
  std::vector<std::vector<long long>> boundary_violations;

  bool certified() const { return failures.empty(); }
};

// Search limit exceeded raises kBudgetExceeded; hypotheses on (a, b) are
// checked exactly and violations raise kDomain.
SweepCertificate verify_tuple_maximization(long long l, long long a, long long b, long long r,
                                           std::size_t budget = 10'000'000);

// R_k for 4 <= k <= 13 from the shipped table.
int deficit_limit(int k);
// floor(k - (3/4)sqrt(k) - 1), exact.
long long deficit_limit_formula(long long k);

// For 4 <= k <= 13: the deficit bound stays below (k-1)^2 - R on the whole
// grid 0 <= R <= R_k, 0 <= b <= R(R-1)/(k-1-R), and fails somewhere at R_k+1.
SweepCertificate sweep_small_k(int k);

BigInt deficit_discriminant(long long b, long long k);
// (4/3)k*sqrt(k) - 2k - 2*sqrt(k).
SurdExpr c_limit(long long k);

enum class CSample { kExtremesAndMidpoint, kExhaustive };

// For k in [k_min, k_max] checks the two discriminant inequalities on the
// chosen (c, b) sample. kExtremesAndMidpoint uses c in {1, floor(C_k/2),
// floor(C_k)} and b in {0, floor(c/2), c}.
SweepCertificate sweep_large_k(long long k_min = 14, long long k_max = 50,
                               CSample sample = CSample::kExtremesAndMidpoint);

// The interval I_c: [0, sqrt(k-1)) for c = 0, otherwise
// [(1-c+sqrt((c-1)^2+4c(k-1)))/2, (-c+sqrt(c^2+4(c+1)(k-1)))/2).
// Requires k >= 14 and 0 <= c <= C_k.
std::pair<SurdExpr, SurdExpr> deficit_interval(long long k, long long c);
// The c whose interval contains R, if any.
std::optional<long long> locate_deficit(long long k, long long R);

}  // namespace ekr::bounds
