#include "ekr/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include "ekr/error.hpp"

namespace ekr {

namespace {

// Number of colors in a greedy coloring of `p`, stopping once `enough` is
// reached. Any clique inside `p` has at most that many vertices.
int greedy_color_bound(const Adjacency& adj, const BitSet& p, int enough, BitSet& uncolored,
                       BitSet& cls) {
  uncolored = p;
  int colors = 0;
  while (uncolored.any()) {
    if (++colors >= enough) return colors;
    cls = uncolored;
    for (int v = cls.first(); v >= 0; v = cls.next(static_cast<std::size_t>(v) + 1)) {
      uncolored.reset(v);
      cls.subtract(adj[v]);
    }
  }
  return colors;
}

struct SharedState {
  std::atomic<std::size_t> found{0};
  std::atomic<bool> abort{false};
};

class BronKerbosch {
 public:
  BronKerbosch(const Adjacency& adj, const CliqueOptions& opt, SharedState& shared)
      : adj_(adj), opt_(opt), shared_(shared), n_(adj.size()) {}

  void run_from(int v, BitSet p, BitSet x) {
    r_.assign(1, v);
    if (static_cast<int>(1 + p.count()) < opt_.min_size) return;
    expand(p, x, 0);
  }

  CliqueResult& result() { return result_; }

 private:
  struct Frame {
    BitSet p, x, cand;
  };

  Frame& frame(std::size_t depth) {
    while (frames_.size() <= depth) frames_.push_back({BitSet(n_), BitSet(n_), BitSet(n_)});
    return frames_[depth];
  }

  void report() {
    const std::size_t total = shared_.found.fetch_add(1) + 1;
    if (opt_.max_count && total > *opt_.max_count) {
      shared_.abort = true;
      return;
    }
    auto clique = r_;
    std::sort(clique.begin(), clique.end());
    ++result_.size_counts[static_cast<int>(clique.size())];
    ++result_.total;
    if (opt_.keep_cliques) result_.cliques.push_back(std::move(clique));
  }

  bool hopeless(const BitSet& p) {
    if (opt_.min_size <= 0) return false;
    const int need = opt_.min_size - static_cast<int>(r_.size());
    if (need <= 0) return false;
    if (static_cast<int>(p.count()) < need) return true;
    return greedy_color_bound(adj_, p, need, scratch_a_, scratch_b_) < need;
  }

  void expand(BitSet& p, BitSet& x, std::size_t depth) {
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    if (p.none()) {
      if (x.none() && static_cast<int>(r_.size()) >= opt_.min_size) report();
      return;
    }
    if (hopeless(p)) return;

    // Tomita pivot: the vertex of P u X with most neighbours in P.
    int pivot = -1;
    std::size_t best = 0;
    auto consider = [&](int u) {
      const std::size_t c = p.and_count(adj_[u]);
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    Frame& f = frame(depth);
    f.cand = p;
    f.cand.subtract(adj_[pivot]);
    for (int v = f.cand.first(); v >= 0; v = f.cand.next(static_cast<std::size_t>(v) + 1)) {
      Frame& g = frame(depth + 1);
      BitSet::assign_and(g.p, p, adj_[v]);
      BitSet::assign_and(g.x, x, adj_[v]);
      r_.push_back(v);
      expand(g.p, g.x, depth + 2);
      r_.pop_back();
      p.reset(v);
      x.set(v);
      if (opt_.min_size > 0 &&
          static_cast<int>(r_.size() + p.count()) < opt_.min_size) {
        return;
      }
    }
  }

  const Adjacency& adj_;
  const CliqueOptions& opt_;
  SharedState& shared_;
  std::size_t n_;
  std::vector<int> r_;
  std::deque<Frame> frames_;
  BitSet scratch_a_, scratch_b_;
  CliqueResult result_;
};

}  // namespace

std::vector<int> degeneracy_order(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].count());
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    adj[pick].for_each([&](int u) {
      if (!removed[u]) --degree[u];
    });
  }
  return order;
}

CliqueResult maximal_cliques(const Adjacency& adj, const CliqueOptions& options) {
  const std::size_t n = adj.size();
  CliqueResult merged;
  if (n == 0) {
    if (options.min_size <= 0) {
      merged.cliques.emplace_back();
      merged.size_counts[0] = 1;
      merged.total = 1;
    }
    return merged;
  }
  const auto order = degeneracy_order(adj);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  SharedState shared;
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, options.workers);
  std::vector<CliqueResult> partial(workers);

  auto work = [&](int id) {
    BronKerbosch search(adj, options, shared);
    while (!shared.abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      const int v = order[i];
      BitSet p(n), x(n);
      adj[v].for_each([&](int u) {
        if (pos[u] > i) {
          p.set(u);
        } else {
          x.set(u);
        }
      });
      search.run_from(v, std::move(p), std::move(x));
    }
    partial[id] = std::move(search.result());
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  if (shared.abort) {
    throw Error(ErrorCode::kBudgetExceeded,
                "more than " + std::to_string(*options.max_count) + " maximal cliques");
  }
  for (auto& part : partial) {
    merged.total += part.total;
    for (auto [size, count] : part.size_counts) merged.size_counts[size] += count;
    for (auto& c : part.cliques) merged.cliques.push_back(std::move(c));
  }
  std::sort(merged.cliques.begin(), merged.cliques.end());
  return merged;
}

namespace {

// Branch and bound with greedy coloring bounds, in the style of Tomita's MCQ.
class MaxClique {
 public:
  MaxClique(const Adjacency& adj, std::vector<int> seed) : adj_(adj), best_(std::move(seed)) {}

  std::vector<int> run() {
    BitSet p(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) p.set(v);
    expand(p);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(BitSet p) {
    // Color classes in order; vertices are visited from the highest color.
    std::vector<int> verts, colors;
    BitSet uncolored = p, cls(adj_.size());
    int color = 0;
    while (uncolored.any()) {
      ++color;
      cls = uncolored;
      for (int v = cls.first(); v >= 0; v = cls.next(static_cast<std::size_t>(v) + 1)) {
        uncolored.reset(v);
        cls.subtract(adj_[v]);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (r_.size() + static_cast<std::size_t>(colors[i]) <= best_.size()) return;
      const int v = verts[i];
      r_.push_back(v);
      BitSet next(adj_.size());
      BitSet::assign_and(next, p, adj_[v]);
      if (next.none()) {
        if (r_.size() > best_.size()) best_ = r_;
      } else {
        expand(std::move(next));
      }
      r_.pop_back();
      p.reset(v);
    }
  }

  const Adjacency& adj_;
  std::vector<int> best_;
  std::vector<int> r_;
};

}  // namespace

std::vector<int> maximum_clique(const Adjacency& adj, std::vector<int> seed) {
  return MaxClique(adj, std::move(seed)).run();
}

}  // namespace ekr
