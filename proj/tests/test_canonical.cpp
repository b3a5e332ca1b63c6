#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ekr/canonical.hpp"
#include "ekr/design.hpp"
#include "ekr/ekr.hpp"
#include "ekr/family.hpp"

using namespace ekr;

namespace {

ColoredGraph random_colored(int n, int colors, double p, std::mt19937_64& rng) {
  ColoredGraph g;
  g.adj.resize(n);
  g.color.resize(n);
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<int> col(0, colors - 1);
  for (int i = 0; i < n; ++i) g.color[i] = col(rng);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }
  }
  return g;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  ColoredGraph h;
  h.adj.resize(g.order());
  h.color.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    h.color[perm[v]] = g.color[v];
    for (int w : g.adj[v]) h.adj[perm[v]].push_back(perm[w]);
  }
  for (auto& row : h.adj) std::sort(row.begin(), row.end());
  return h;
}

bool brute_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  std::vector<std::vector<char>> ea(n, std::vector<char>(n)), eb = ea;
  for (int v = 0; v < n; ++v) {
    for (int w : a.adj[v]) ea[v][w] = 1;
    for (int w : b.adj[v]) eb[v][w] = 1;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (a.color[v] != b.color[perm[v]]) ok = false;
      for (int w = 0; w < n && ok; ++w) {
        if (ea[v][w] != eb[perm[v]][perm[w]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Design relabel_design(const Design& d, std::mt19937_64& rng) {
  std::vector<int> perm(d.v());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto blocks = d.blocks();
  for (auto& blk : blocks) {
    for (int& p : blk) p = perm[p];
  }
  std::shuffle(blocks.begin(), blocks.end(), rng);
  return Design::validate(d.v(), d.k(), blocks);
}

std::multiset<std::string> code_multiset(const Design& d) {
  std::multiset<std::string> out;
  for (const auto& f : enumerate_maximal_ekr(d).families) out.insert(family_canonical_code(f));
  return out;
}

}  // namespace

TEST_CASE("certificates decide isomorphism on tiny graphs") {
  std::mt19937_64 rng(31);
  int iso = 0, non_iso = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const auto a = random_colored(n, 1 + trial % 2, 0.45, rng);
    ColoredGraph b;
    if (trial % 2 == 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    } else {
      b = random_colored(n, 1 + trial % 2, 0.45, rng);
    }
    const bool want = brute_isomorphic(a, b);
    CHECK(isomorphic(a, b) == want);
    (want ? iso : non_iso)++;
  }
  CHECK(iso > 100);
  CHECK(non_iso > 50);
}

TEST_CASE("certificates are invariant under relabeling of regular graphs") {
  std::mt19937_64 rng(4);
  // Cycle C_12 and the Petersen graph defeat plain color refinement.
  ColoredGraph cycle;
  cycle.adj.resize(12);
  cycle.color.assign(12, 0);
  for (int i = 0; i < 12; ++i) {
    cycle.adj[i] = {(i + 11) % 12, (i + 1) % 12};
    std::sort(cycle.adj[i].begin(), cycle.adj[i].end());
  }
  ColoredGraph petersen;
  petersen.adj.resize(10);
  petersen.color.assign(10, 0);
  auto link = [&](int a, int b) {
    petersen.adj[a].push_back(b);
    petersen.adj[b].push_back(a);
  };
  for (int i = 0; i < 5; ++i) {
    link(i, (i + 1) % 5);
    link(i, i + 5);
    link(i + 5, (i + 2) % 5 + 5);
  }
  for (const auto* g : {&cycle, &petersen}) {
    const auto base = canonical_form(*g);
    CHECK(base.generators > 0);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> perm(g->order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(*g, perm)).certificate == base.certificate);
    }
  }
  // Two disjoint hexagons versus C_12: same degrees, not isomorphic.
  ColoredGraph hexes = cycle;
  for (auto& row : hexes.adj) row.clear();
  for (int h = 0; h < 2; ++h) {
    for (int i = 0; i < 6; ++i) {
      const int a = 6 * h + i, b = 6 * h + (i + 1) % 6;
      hexes.adj[a].push_back(b);
      hexes.adj[b].push_back(a);
    }
  }
  for (auto& row : hexes.adj) std::sort(row.begin(), row.end());
  CHECK_FALSE(isomorphic(cycle, hexes));
}

TEST_CASE("family codes are invariant under design relabeling") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"sts13:1", "sts13:2", "affine:3", "pg3:2"}) {
    CAPTURE(spec);
    const auto d = builtin_design(spec);
    const auto base = code_multiset(d);
    for (int t = 0; t < 2; ++t) CHECK(code_multiset(relabel_design(d, rng)) == base);
  }
}

TEST_CASE("pencils share a code and differ from triangles") {
  const auto d = hermitian_unital(3);
  const auto code = family_canonical_code(point_pencil(d, 0));
  for (int p = 1; p < d.v(); ++p) CHECK(family_canonical_code(point_pencil(d, p)) == code);
  int off = 0;
  while (d.on_block(off, 0)) ++off;
  CHECK(family_canonical_code(triangle(d, off, 0)) != code);
  CHECK(code.rfind("4|9|28|", 0) == 0);
}
