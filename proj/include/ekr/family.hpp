#pragma once

// Block families of a fixed design: membership sets, the block-intersection
// graph, the two standard constructions and the cover statistics.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/cliques.hpp"
#include "ekr/design.hpp"

namespace ekr {

class BlockSet {
 public:
  explicit BlockSet(const Design& design) : design_(&design), bits_(design.b()) {}
  // Throws kDomain for indices outside 0..b-1.
  static BlockSet of(const Design& design, std::span<const int> blocks);

  const Design& design() const { return *design_; }
  const BitSet& bits() const { return bits_; }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  bool contains(int block) const { return bits_.test(block); }
  void insert(int block) { bits_.set(block); }
  void erase(int block) { bits_.reset(block); }
  std::vector<int> indices() const { return bits_.indices(); }

  friend bool operator==(const BlockSet& a, const BlockSet& b) {
    return a.design_ == b.design_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const BlockSet& a, const BlockSet& b) { return a.indices() < b.indices(); }

 private:
  const Design* design_;
  BitSet bits_;
};

// Two distinct blocks are adjacent iff they share a point.
Adjacency intersection_graph(const Design& design);

bool is_intersecting(const BlockSet& family);
// Throws kNotIntersecting when the family is not intersecting.
bool is_maximal(const BlockSet& family);

BlockSet point_pencil(const Design& design, int point);
// `block` plus every block through `point` that meets it. Throws
// kPointOnBlock when the point lies on the block.
BlockSet triangle(const Design& design, int point, int block);

// The point whose full pencil equals the family, if any.
std::optional<int> pencil_point(const BlockSet& family);
// Some (point, block) with triangle(point, block) equal to the family.
std::optional<std::pair<int, int>> triangle_witness(const BlockSet& family);

struct CoverProfile {
  int covered = 0;         // points on at least one member
  std::vector<int> k_hist;  // k_hist[i] = points on exactly i members; index 0 unused
  int k_s = 0;             // largest i with k_hist[i] > 0
  int b_offset = 0;        // covered - k(k-1)
};

CoverProfile cover_profile(const BlockSet& family);

}  // namespace ekr
