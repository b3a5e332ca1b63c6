#include "ekr/family.hpp"

#include <string>

#include "ekr/error.hpp"

namespace ekr {

BlockSet BlockSet::of(const Design& design, std::span<const int> blocks) {
  BlockSet s(design);
  for (int bi : blocks) {
    if (bi < 0 || bi >= design.b()) {
      throw Error(ErrorCode::kDomain, "block index " + std::to_string(bi) + " out of range");
    }
    s.insert(bi);
  }
  return s;
}

Adjacency intersection_graph(const Design& design) {
  const int b = design.b();
  Adjacency adj(b, BitSet(b));
  for (int p = 0; p < design.v(); ++p) {
    const auto through = design.blocks_through(p);
    for (int x : through) {
      for (int y : through) {
        if (x != y) adj[x].set(y);
      }
    }
  }
  return adj;
}

bool is_intersecting(const BlockSet& family) {
  const Design& d = family.design();
  const auto idx = family.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (d.meet(idx[i], idx[j]) < 0) return false;
    }
  }
  return true;
}

bool is_maximal(const BlockSet& family) {
  if (!is_intersecting(family)) {
    throw Error(ErrorCode::kNotIntersecting, "family is not pairwise intersecting");
  }
  const Design& d = family.design();
  const auto idx = family.indices();
  for (int c = 0; c < d.b(); ++c) {
    if (family.contains(c)) continue;
    bool meets_all = true;
    for (int m : idx) {
      if (d.meet(c, m) < 0) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return false;
  }
  return true;
}

BlockSet point_pencil(const Design& design, int point) {
  if (point < 0 || point >= design.v()) throw Error(ErrorCode::kDomain, "point out of range");
  return BlockSet::of(design, design.blocks_through(point));
}

BlockSet triangle(const Design& design, int point, int block) {
  if (point < 0 || point >= design.v() || block < 0 || block >= design.b()) {
    throw Error(ErrorCode::kDomain, "point or block out of range");
  }
  if (design.on_block(point, block)) {
    throw Error(ErrorCode::kPointOnBlock, "point " + std::to_string(point) + " lies on block " +
                                              std::to_string(block));
  }
  BlockSet s(design);
  s.insert(block);
  for (int c : design.blocks_through(point)) {
    if (design.meet(c, block) >= 0) s.insert(c);
  }
  return s;
}

std::optional<int> pencil_point(const BlockSet& family) {
  const Design& d = family.design();
  if (family.size() != d.r()) return std::nullopt;
  const auto idx = family.indices();
  const int p = d.meet(idx[0], idx[1]);
  if (p < 0) return std::nullopt;
  for (int bi : idx) {
    if (!d.on_block(p, bi)) return std::nullopt;
  }
  return p;
}

std::optional<std::pair<int, int>> triangle_witness(const BlockSet& family) {
  const Design& d = family.design();
  const auto idx = family.indices();
  if (idx.size() < 3) return std::nullopt;
  for (int base : idx) {
    int first = -1, second = -1;
    for (int bi : idx) {
      if (bi == base) continue;
      if (first < 0) {
        first = bi;
      } else {
        second = bi;
        break;
      }
    }
    const int p = d.meet(first, second);
    if (p < 0 || d.on_block(p, base)) continue;
    if (triangle(d, p, base) == family) return std::make_pair(p, base);
  }
  return std::nullopt;
}

CoverProfile cover_profile(const BlockSet& family) {
  const Design& d = family.design();
  std::vector<int> on(d.v(), 0);
  family.bits().for_each([&](int bi) {
    for (int p : d.block(bi)) ++on[p];
  });
  CoverProfile prof;
  prof.k_hist.assign(1, 0);
  for (int c : on) {
    if (c == 0) continue;
    ++prof.covered;
    if (c >= static_cast<int>(prof.k_hist.size())) prof.k_hist.resize(c + 1, 0);
    ++prof.k_hist[c];
  }
  prof.k_s = static_cast<int>(prof.k_hist.size()) - 1;
  prof.b_offset = prof.covered - d.k() * (d.k() - 1);
  return prof;
}

}  // namespace ekr
