#pragma once

// Canonical forms of vertex-colored graphs by color refinement and
// individualization search with automorphism pruning. Sized for the small
// incidence structures of block families (tens to a few hundred vertices).

#include <cstddef>
#include <string>
#include <vector>

namespace ekr {

class BlockSet;

struct ColoredGraph {
  std::vector<std::vector<int>> adj;  // symmetric, no loops
  std::vector<int> color;

  int order() const { return static_cast<int>(adj.size()); }
};

struct CanonicalForm {
  std::vector<int> position;     // vertex -> canonical position
  std::vector<long long> certificate;  // equal iff the graphs are isomorphic
  std::size_t leaves = 0;        // search-tree leaves visited
  std::size_t generators = 0;    // automorphisms found along the way
};

CanonicalForm canonical_form(const ColoredGraph& graph);

inline bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

// Graph of the family's incidence structure restricted to member blocks and
// the points on two or more of them. Points on a single member are implied,
// since every block has exactly k points.
ColoredGraph family_incidence_graph(const BlockSet& family);

// "k|size|covered|" followed by the canonical block/point incidences. Equal
// codes mean isomorphic induced point-block structures.
std::string family_canonical_code(const BlockSet& family);

}  // namespace ekr
