#include <doctest.h>

#include <random>
#include <set>

#include "ekr/cliques.hpp"
#include "ekr/design.hpp"
#include "ekr/ekr.hpp"
#include "ekr/error.hpp"
#include "ekr/family.hpp"

using namespace ekr;

namespace {

// Every maximal intersecting family by subset scan.
std::vector<std::vector<int>> brute_maximal(const Design& d) {
  const int b = d.b();
  REQUIRE(b <= 20);
  std::vector<std::uint32_t> meets(b, 0);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i != j && d.meet(i, j) >= 0) meets[i] |= 1u << j;
    }
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 1; s < (1u << b); ++s) {
    bool ok = true;
    for (int i = 0; i < b && ok; ++i) {
      if ((s >> i & 1) && ((s & ~(1u << i)) & ~meets[i])) ok = false;
    }
    if (!ok) continue;
    bool maximal = true;
    for (int j = 0; j < b && maximal; ++j) {
      if (!(s >> j & 1) && (s & ~meets[j]) == 0) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> f;
    for (int i = 0; i < b; ++i) {
      if (s >> i & 1) f.push_back(i);
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> as_lists(const EnumerationResult& r) {
  std::vector<std::vector<int>> out;
  for (const auto& f : r.families) out.push_back(f.indices());
  return out;
}

Adjacency random_graph(int n, double p, std::mt19937_64& rng) {
  Adjacency adj(n, BitSet(n));
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  return adj;
}

std::vector<std::vector<int>> brute_cliques(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      for (int j = i + 1; j < n && clique; ++j) {
        if ((s >> i & 1) && (s >> j & 1) && !adj[i].test(j)) clique = false;
      }
    }
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (s >> v & 1) continue;
      bool all = true;
      for (int i = 0; i < n && all; ++i) {
        if ((s >> i & 1) && !adj[v].test(i)) all = false;
      }
      if (all) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> c;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) c.push_back(i);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("maximal cliques agree with subset scan on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 14;
    const auto adj = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const auto want = brute_cliques(adj);
    for (int workers : {1, 3}) {
      CliqueOptions opt;
      opt.workers = workers;
      const auto got = maximal_cliques(adj, opt);
      CHECK(got.cliques == want);
      CHECK(got.total == want.size());
    }
    std::size_t best = 0;
    for (const auto& c : want) best = std::max(best, c.size());
    CHECK(maximum_clique(adj).size() == best);
    CliqueOptions big;
    big.min_size = 3;
    std::size_t expect_big = 0;
    for (const auto& c : want) expect_big += c.size() >= 3;
    CHECK(maximal_cliques(adj, big).total == expect_big);
  }
}

TEST_CASE("degeneracy order is a permutation") {
  std::mt19937_64 rng(8);
  const auto adj = random_graph(40, 0.3, rng);
  auto order = degeneracy_order(adj);
  std::sort(order.begin(), order.end());
  for (int i = 0; i < 40; ++i) CHECK(order[i] == i);
}

TEST_CASE("enumeration matches brute force on small designs") {
  for (const char* spec :
       {"projective:2", "affine:3", "hermitian-unital:2", "kgraph:4", "kgraph:5", "kgraph:6"}) {
    CAPTURE(spec);
    const auto d = builtin_design(spec);
    CHECK(as_lists(enumerate_maximal_ekr(d)) == brute_maximal(d));
  }
}

TEST_CASE("intersecting and maximal predicates") {
  const auto ag = affine_plane(3);
  BlockSet empty(ag);
  CHECK(is_intersecting(empty));
  const auto classes = parallel_classes(ag);
  const auto par = BlockSet::of(ag, std::vector<int>{classes[0][0], classes[0][1]});
  CHECK_FALSE(is_intersecting(par));
  CHECK_THROWS_AS(is_maximal(par), Error);
  CHECK(is_intersecting(point_pencil(ag, 0)));
  CHECK(is_maximal(point_pencil(ag, 0)));  // r = 4 > k = 3

  const auto fano = projective_plane(2);
  const auto pencil = point_pencil(fano, 0);
  CHECK(pencil.size() == 3);
  CHECK_FALSE(is_maximal(pencil));
  const auto all = enumerate_maximal_ekr(fano);
  REQUIRE(all.total == 1);
  CHECK(all.families[0].size() == 7);

  CHECK(point_pencil(sts13(1), 0).size() == 6);
  CHECK(point_pencil(complete_graph(5), 0).size() == 4);

  const auto u3 = hermitian_unital(3);
  const int blk = 0;
  int off = 0;
  while (u3.on_block(off, blk)) ++off;
  const auto tri = triangle(u3, off, blk);
  CHECK(tri.size() == 5);
  CHECK(is_maximal(tri));
  CHECK(triangle_witness(tri).has_value());
  CHECK_THROWS_AS(triangle(u3, u3.block(blk)[0], blk), Error);
  CHECK_THROWS_AS(BlockSet::of(u3, std::vector<int>{63}), Error);
}

TEST_CASE("cover profiles") {
  const auto pg = pg3_line_design(2);
  const auto pencil = point_pencil(pg, 3);
  const auto prof = cover_profile(pencil);
  CHECK(prof.covered == 7 * 2 + 1);
  CHECK(prof.k_s == 7);
  CHECK(prof.k_hist[1] == 14);
  CHECK(prof.k_hist[7] == 1);
  CHECK(pencil_point(pencil) == 3);

  // Every family with a point on k members covers k^2 - k + 1 points.
  for (const char* spec : {"pg3:2", "sts13:1", "sts13:2", "affine:3"}) {
    const auto d = builtin_design(spec);
    for (const auto& f : enumerate_maximal_ekr(d).families) {
      const auto p = cover_profile(f);
      int total = 0;
      for (int i = 1; i < static_cast<int>(p.k_hist.size()); ++i) total += p.k_hist[i];
      CHECK(total == p.covered);
      int incidences = 0;
      for (int i = 1; i < static_cast<int>(p.k_hist.size()); ++i) incidences += i * p.k_hist[i];
      CHECK(incidences == f.size() * d.k());
      if (p.k_s == d.k() && !pencil_point(f)) CHECK(p.covered == d.k() * d.k() - d.k() + 1);
    }
  }
}

TEST_CASE("enumeration invariants and determinism") {
  for (const char* spec : {"sts13:1", "sts13:2", "pg3:2", "hermitian-unital:3", "kgraph:9"}) {
    CAPTURE(spec);
    const auto d = builtin_design(spec);
    const auto one = enumerate_maximal_ekr(d);
    EnumerateOptions par;
    par.workers = 4;
    const auto four = enumerate_maximal_ekr(d, par);
    CHECK(as_lists(one) == as_lists(four));
    CHECK(one.size_counts == four.size_counts);
    std::set<std::vector<int>> uniq;
    std::size_t tally = 0;
    for (const auto& f : one.families) {
      CHECK(is_intersecting(f));
      CHECK(is_maximal(f));
      CHECK(uniq.insert(f.indices()).second);
    }
    for (const auto& [size, n] : one.size_counts) tally += n;
    CHECK(tally == one.total);
    EnumerateOptions sizes;
    sizes.size_only = true;
    const auto counted = enumerate_maximal_ekr(d, sizes);
    CHECK(counted.families.empty());
    CHECK(counted.size_counts == one.size_counts);
    // Every pencil is maximal when r > k.
    if (d.r() > d.k()) {
      for (int p = 0; p < d.v(); ++p) CHECK(uniq.count(point_pencil(d, p).indices()) == 1);
    }
  }
}

TEST_CASE("budget guard") {
  EnumerateOptions opt;
  opt.max_count = 10;
  try {
    enumerate_maximal_ekr(hermitian_unital(3), opt);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  opt.max_count = 1540;
  CHECK(enumerate_maximal_ekr(hermitian_unital(3), opt).total == 1540);
}

TEST_CASE("maximum family sizes") {
  CHECK(max_ekr_size(pg3_line_design(2)).size == 7);
  CHECK(max_ekr_size(complete_graph(7)).size == 6);
  CHECK(max_ekr_size(projective_plane(2)).size == 7);
  const auto s2 = sts13(2);
  const auto m = max_ekr_size(s2);
  CHECK(m.size == 6);
  CHECK(is_intersecting(m.witness));
}

TEST_CASE("O'Nan configurations") {
  CHECK_FALSE(find_onan(hermitian_unital(2)).has_value());
  CHECK_FALSE(find_onan(hermitian_unital(3)).has_value());
  CHECK(find_onan(projective_plane(3)).has_value());
  const auto fano = projective_plane(2);
  const auto q = find_onan(fano);
  REQUIRE(q.has_value());
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(fano.meet((*q)[i], (*q)[j]) >= 0);
      for (int l = j + 1; l < 4; ++l) {
        const int p = fano.meet((*q)[i], (*q)[j]);
        CHECK_FALSE(fano.on_block(p, (*q)[l]));
      }
    }
  }
  for (int n = 4; n <= 8; ++n) CHECK_FALSE(has_onan(complete_graph(n)));
}

TEST_CASE("O'Nan-free verdicts") {
  const auto v2 = classify_onan_free(hermitian_unital(2));
  CHECK(v2.confirmed);
  const auto v3 = classify_onan_free(hermitian_unital(3), 2);
  CHECK(v3.confirmed);
  CHECK(v3.pencils == 28);
  CHECK(v3.triangles == 1512);
  try {
    classify_onan_free(projective_plane(2));
    FAIL("expected HasONan");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kHasONan);
  }
}

TEST_CASE("classification") {
  const auto ag = affine_plane(3);
  const auto fams = enumerate_maximal_ekr(ag).families;
  const auto types = classify(ag, fams);
  REQUIRE(types.size() == 2);
  CHECK(types[0].type.size == 4);
  CHECK(types[1].type.size == 4);
  CHECK(types[0].count + types[1].count == 81);

  const auto s = sts13(1);
  const auto st = classify(s, enumerate_maximal_ekr(s).families);
  REQUIRE(st.size() == 3);
  CHECK(st[0].type.label == "pencil");
  CHECK(st[0].count == 13);
  CHECK(st[1].type.size == 5);
  CHECK(st[2].type.size == 4);

  const auto other = sts13(2);
  const auto foreign = enumerate_maximal_ekr(other).families;
  CHECK_THROWS_AS(classify(s, foreign), Error);

  for (int v = 4; v <= 8; ++v) {
    const auto kg = complete_graph(v);
    const auto kt = classify(kg, enumerate_maximal_ekr(kg).families);
    CHECK(kt.size() == 2);
  }
}
