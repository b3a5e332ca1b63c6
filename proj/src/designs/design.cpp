#include "ekr/design.hpp"

#include <algorithm>
#include <string>

#include "ekr/error.hpp"

namespace ekr {

Design Design::validate(int v, int k, std::vector<std::vector<int>> blocks) {
  if (k < 2 || v <= k) {
    throw ValidationError(ErrorCode::kParameterMismatch,
                          "need v > k > 1, got v=" + std::to_string(v) + " k=" + std::to_string(k));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& blk = blocks[i];
    if (static_cast<int>(blk.size()) != k) {
      throw ValidationError(ErrorCode::kInvalidBlock, "block " + std::to_string(i) + " has " +
                                                          std::to_string(blk.size()) +
                                                          " points, expected " + std::to_string(k));
    }
    std::sort(blk.begin(), blk.end());
    for (std::size_t j = 0; j < blk.size(); ++j) {
      if (blk[j] < 0 || blk[j] >= v) {
        throw ValidationError(ErrorCode::kInvalidBlock,
                              "block " + std::to_string(i) + " has point " +
                                  std::to_string(blk[j]) + " outside 0.." + std::to_string(v - 1));
      }
      if (j > 0 && blk[j] == blk[j - 1]) {
        throw ValidationError(ErrorCode::kInvalidBlock, "block " + std::to_string(i) +
                                                            " repeats point " +
                                                            std::to_string(blk[j]));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());

  Design d;
  d.v_ = v;
  d.k_ = k;
  d.pair_block_.assign(static_cast<std::size_t>(v) * v, -1);
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
    const auto& blk = blocks[bi];
    for (int a = 0; a < k; ++a) {
      for (int c = a + 1; c < k; ++c) {
        const int p = blk[a], q = blk[c];
        int& slot = d.pair_block_[static_cast<std::size_t>(p) * v + q];
        if (slot >= 0) {
          throw ValidationError(ErrorCode::kPairRepeated,
                                "pair {" + std::to_string(p) + "," + std::to_string(q) +
                                    "} lies in blocks " + std::to_string(slot) + " and " +
                                    std::to_string(bi),
                                p, q, slot, bi);
        }
        slot = bi;
        d.pair_block_[static_cast<std::size_t>(q) * v + p] = bi;
      }
    }
  }
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      if (d.pair_block_[static_cast<std::size_t>(p) * v + q] < 0) {
        throw ValidationError(ErrorCode::kPairUncovered,
                              "pair {" + std::to_string(p) + "," + std::to_string(q) +
                                  "} lies in no block",
                              p, q);
      }
    }
  }

  // With every pair covered once these hold automatically; kept as a guard.
  const long long vv = v;
  if ((vv - 1) % (k - 1) != 0 || (vv * (vv - 1)) % (static_cast<long long>(k) * (k - 1)) != 0 ||
      static_cast<long long>(blocks.size()) != vv * (vv - 1) / (static_cast<long long>(k) * (k - 1))) {
    throw ValidationError(ErrorCode::kParameterMismatch, "block count inconsistent with v and k");
  }
  d.r_ = (v - 1) / (k - 1);
  d.point_blocks_.assign(v, {});
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
    for (int p : blocks[bi]) d.point_blocks_[p].push_back(bi);
  }
  for (int p = 0; p < v; ++p) {
    if (static_cast<int>(d.point_blocks_[p].size()) != d.r_) {
      throw ValidationError(ErrorCode::kParameterMismatch,
                            "point " + std::to_string(p) + " lies on " +
                                std::to_string(d.point_blocks_[p].size()) + " blocks, expected r=" +
                                std::to_string(d.r_));
    }
  }
  d.blocks_ = std::move(blocks);
  return d;
}

DesignParams Design::params() const {
  return DesignParams{v_, k_, b(), r_, (k_ - 1) * (k_ - 1) - r_};
}

bool Design::on_block(int point, int block) const {
  const auto& blk = blocks_[block];
  return std::binary_search(blk.begin(), blk.end(), point);
}

int Design::meet(int block_a, int block_b) const {
  const auto& x = blocks_[block_a];
  const auto& y = blocks_[block_b];
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return x[i];
    if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return -1;
}

std::optional<int> Design::find_block(std::vector<int> points) const {
  std::sort(points.begin(), points.end());
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), points);
  if (it == blocks_.end() || *it != points) return std::nullopt;
  return static_cast<int>(it - blocks_.begin());
}

}  // namespace ekr
