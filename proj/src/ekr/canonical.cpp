#include "ekr/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ekr/family.hpp"

namespace ekr {

namespace {

using Cells = std::vector<int>;  // vertex -> cell id; ids are ranks 0..m-1

int rank_by(Cells& cells, const std::vector<int>& order_hint,
            const std::function<bool(int, int)>& less) {
  std::vector<int> idx = order_hint;
  std::stable_sort(idx.begin(), idx.end(), less);
  int rank = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && less(idx[i - 1], idx[i])) ++rank;
    cells[idx[i]] = rank;
  }
  return rank + 1;
}

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.order()) {
    identity_.resize(n_);
    std::iota(identity_.begin(), identity_.end(), 0);
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.certificate = {0};
      return out;
    }
    Cells cells(n_);
    rank_by(cells, identity_, [&](int a, int b) { return g_.color[a] < g_.color[b]; });
    refine(cells);
    std::vector<int> prefix;
    search(cells, prefix);
    out.position = best_position_;
    out.certificate = best_cert_;
    out.leaves = leaves_;
    out.generators = generators_.size();
    return out;
  }

 private:
  // Splits cells by neighbour counts per cell until nothing changes.
  void refine(Cells& cells) const {
    int m = *std::max_element(cells.begin(), cells.end()) + 1;
    std::vector<std::vector<int>> sig(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].clear();
        sig[v].push_back(cells[v]);
        for (int u : g_.adj[v]) sig[v].push_back(cells[u]);
        std::sort(sig[v].begin() + 1, sig[v].end());
      }
      Cells next(n_);
      const int m2 = rank_by(next, identity_, [&](int a, int b) { return sig[a] < sig[b]; });
      cells.swap(next);
      if (m2 == m) return;
      m = m2;
    }
  }

  std::vector<long long> certificate(const Cells& pos) const {
    std::vector<long long> cert;
    cert.reserve(1 + n_ + n_);
    cert.push_back(n_);
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[pos[v]] = v;
    for (int p = 0; p < n_; ++p) cert.push_back(g_.color[at[p]]);
    std::vector<long long> edges;
    for (int v = 0; v < n_; ++v) {
      for (int u : g_.adj[v]) {
        if (pos[v] < pos[u]) edges.push_back(static_cast<long long>(pos[v]) * n_ + pos[u]);
      }
    }
    std::sort(edges.begin(), edges.end());
    cert.insert(cert.end(), edges.begin(), edges.end());
    return cert;
  }

  // Orbit representative of every vertex under the stored automorphisms that
  // fix `prefix` pointwise.
  std::vector<int> orbit_roots(const std::vector<int>& prefix) const {
    std::vector<int> parent(identity_);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int p : prefix) {
        if (gen[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns -1 to continue normally, or a prefix length to unwind to.
  int search(const Cells& cells, std::vector<int>& prefix) {
    std::vector<int> cell_size(n_, 0);
    for (int c : cells) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) return leaf(cells, prefix);

    std::vector<int> members;
    for (int v = 0; v < n_; ++v) {
      if (cells[v] == target) members.push_back(v);
    }
    const int level = static_cast<int>(prefix.size());
    std::vector<int> tried;
    for (int v : members) {
      if (!tried.empty()) {
        const auto roots = orbit_roots(prefix);
        bool seen = false;
        for (int t : tried) {
          if (roots[t] == roots[v]) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
      }
      tried.push_back(v);
      Cells child(n_);
      rank_by(child, identity_, [&](int a, int b) {
        if (cells[a] != cells[b]) return cells[a] < cells[b];
        return (a == v) > (b == v);
      });
      refine(child);
      prefix.push_back(v);
      const int jump = search(child, prefix);
      prefix.pop_back();
      if (jump >= 0 && jump < level) return jump;
    }
    return -1;
  }

  int leaf(const Cells& pos, const std::vector<int>& prefix) {
    ++leaves_;
    auto cert = certificate(pos);
    if (first_cert_.empty()) {
      first_cert_ = cert;
      first_position_ = pos;
      first_path_ = prefix;
      best_cert_ = std::move(cert);
      best_position_ = pos;
      return -1;
    }
    if (cert == first_cert_) {
      add_automorphism(first_position_, pos);
      std::size_t common = 0;
      while (common < prefix.size() && common < first_path_.size() &&
             prefix[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (cert == best_cert_) {
      add_automorphism(best_position_, pos);
      return -1;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_position_ = pos;
    }
    return -1;
  }

  // Both labelings give the same labeled graph, so mapping a vertex to the
  // vertex holding its position in `ref` is an automorphism.
  void add_automorphism(const Cells& ref, const Cells& pos) {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[ref[v]] = v;
    std::vector<int> gen(n_);
    for (int v = 0; v < n_; ++v) gen[v] = at[pos[v]];
    if (gen != identity_) generators_.push_back(std::move(gen));
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> generators_;
  std::vector<long long> first_cert_, best_cert_;
  Cells first_position_, best_position_;
  std::vector<int> first_path_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& graph) { return Canonizer(graph).run(); }

ColoredGraph family_incidence_graph(const BlockSet& family) {
  const Design& d = family.design();
  const auto members = family.indices();
  std::vector<int> on(d.v(), 0);
  for (int bi : members) {
    for (int p : d.block(bi)) ++on[p];
  }
  ColoredGraph g;
  const int s = static_cast<int>(members.size());
  std::vector<int> vertex_of_point(d.v(), -1);
  int n = s;
  for (int p = 0; p < d.v(); ++p) {
    if (on[p] >= 2) vertex_of_point[p] = n++;
  }
  g.adj.assign(n, {});
  g.color.assign(n, 1);
  for (int i = 0; i < s; ++i) {
    g.color[i] = 0;
    for (int p : d.block(members[i])) {
      const int pv = vertex_of_point[p];
      if (pv < 0) continue;
      g.adj[i].push_back(pv);
      g.adj[pv].push_back(i);
    }
  }
  return g;
}

std::string family_canonical_code(const BlockSet& family) {
  const Design& d = family.design();
  const auto g = family_incidence_graph(family);
  const auto form = canonical_form(g);
  const auto prof = cover_profile(family);
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[form.position[v]] = v;
  std::string code = std::to_string(d.k()) + "|" + std::to_string(family.size()) + "|" +
                     std::to_string(prof.covered) + "|";
  // Blocks precede shared points in canonical order (color 0 sorts first).
  for (int pos = 0; pos < n; ++pos) {
    const int v = at[pos];
    if (g.color[v] != 0) break;
    std::vector<int> pts;
    for (int u : g.adj[v]) pts.push_back(form.position[u]);
    std::sort(pts.begin(), pts.end());
    if (pos > 0) code += ';';
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) code += ',';
      code += std::to_string(pts[i]);
    }
  }
  return code;
}

}  // namespace ekr
