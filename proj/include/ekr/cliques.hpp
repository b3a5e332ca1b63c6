#pragma once

// Clique search on graphs given as bitset adjacency rows. adj[v] must not
// contain v itself.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ekr/bitset.hpp"

namespace ekr {

using Adjacency = std::vector<BitSet>;

struct CliqueOptions {
  int min_size = 0;                      // report only cliques at least this large
  std::optional<std::size_t> max_count;  // kBudgetExceeded once more are found
  int workers = 1;
  bool keep_cliques = true;              // false: only sizes are tallied
};

struct CliqueResult {
  std::vector<std::vector<int>> cliques;  // each sorted; list in lexicographic order
  std::map<int, std::size_t> size_counts;
  std::size_t total = 0;
};

// Smallest-last ordering; ties go to the lower vertex index.
std::vector<int> degeneracy_order(const Adjacency& adj);

// Every maximal clique of size >= min_size exactly once. The result does not
// depend on the worker count.
CliqueResult maximal_cliques(const Adjacency& adj, const CliqueOptions& options = {});

// A maximum clique, sorted. `seed` is a known clique used as the starting
// incumbent; it is returned when nothing larger exists.
std::vector<int> maximum_clique(const Adjacency& adj, std::vector<int> seed = {});

}  // namespace ekr
