#pragma once

// Maximal intersecting block families: exhaustive enumeration, maximum size,
// O'Nan configurations and classification into isomorphism types.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekr/design.hpp"
#include "ekr/family.hpp"

namespace ekr {

struct EnumerateOptions {
  int min_size = 0;
  std::optional<std::size_t> max_count;  // kBudgetExceeded beyond this many
  bool size_only = false;                // tally sizes, keep no families
  int workers = 1;
};

struct EnumerationResult {
  std::vector<BlockSet> families;  // ordered by sorted block-index lists
  std::map<int, std::size_t> size_counts;
  std::size_t total = 0;
};

// Every maximal intersecting family with at least min_size blocks, once each.
EnumerationResult enumerate_maximal_ekr(const Design& design, const EnumerateOptions& options = {});

struct MaxEkr {
  int size = 0;
  BlockSet witness;
};

MaxEkr max_ekr_size(const Design& design);

// Four pairwise intersecting blocks, no three through a common point. The
// lexicographically least such quadruple.
std::optional<std::array<int, 4>> find_onan(const Design& design);
inline bool has_onan(const Design& design) { return find_onan(design).has_value(); }

struct EkrType {
  int size = 0;
  CoverProfile profile;
  std::string canonical_code;
  // "pencil", "triangle", "EKR_<size>" (k = 3), "plane" (a projective plane
  // of order k-1 on k^2-k+1 covered points) or "other".
  std::string label;
};

struct TypeCount {
  EkrType type;
  std::size_t count = 0;
  BlockSet witness;  // first family of the type in input order
};

// Groups families by canonical code. Sorted by size descending, then label,
// then code.
std::vector<TypeCount> classify(const Design& design, std::span<const BlockSet> families);

std::string type_label(const BlockSet& family);

struct OnanFreeVerdict {
  bool confirmed = false;
  std::size_t families = 0;
  std::size_t pencils = 0;
  std::size_t triangles = 0;
  std::optional<BlockSet> counterexample;
};

// Checks that every maximal family is a pencil or a triangle. Throws
// kHasONan when the design contains an O'Nan configuration.
OnanFreeVerdict classify_onan_free(const Design& design, int workers = 1);

}  // namespace ekr
