#pragma once

// 2-(v,k,1) designs: validation, the constructions used throughout the
// project, the on-disk text format, and resolutions into parallel classes.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ekr {

struct DesignParams {
  int v = 0;
  int k = 0;
  int b = 0;
  int r = 0;
  int R = 0;  // (k-1)^2 - r; negative when r > (k-1)^2
};

// Immutable once constructed; every instance satisfies the Steiner axioms.
class Design {
 public:
  // Sorts each block and the block list, then checks that every point pair
  // lies in exactly one block. Throws ValidationError.
  static Design validate(int v, int k, std::vector<std::vector<int>> blocks);

  int v() const { return v_; }
  int k() const { return k_; }
  int b() const { return static_cast<int>(blocks_.size()); }
  int r() const { return r_; }
  DesignParams params() const;

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::span<const int> block(int index) const { return blocks_[index]; }
  // Blocks through `point`, ascending.
  std::span<const int> blocks_through(int point) const { return point_blocks_[point]; }
  // The unique block containing two distinct points.
  int block_through(int p, int q) const { return pair_block_[static_cast<std::size_t>(p) * v_ + q]; }
  bool on_block(int point, int block) const;
  // Common point of two distinct blocks, or -1 when disjoint.
  int meet(int block_a, int block_b) const;

  std::optional<int> find_block(std::vector<int> points) const;

  friend bool operator==(const Design& a, const Design& b) {
    return a.v_ == b.v_ && a.k_ == b.k_ && a.blocks_ == b.blocks_;
  }

 private:
  Design() = default;

  int v_ = 0;
  int k_ = 0;
  int r_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::vector<int>> point_blocks_;
  std::vector<int> pair_block_;  // v*v, -1 on the diagonal
};

// --- constructions ---

Design projective_plane(int q);
Design affine_plane(int q);
Design hermitian_unital(int q);
Design pg3_line_design(int q);
Design complete_graph(int v);
// The two 2-(13,3,1) designs, labels 0..9,a,b,c mapped to 0..12.
Design sts13(int variant);

// "name:param", e.g. "pg3:2", "affine:3", "sts13:2", "kgraph:7",
// "projective:2", "hermitian-unital:3". Throws kParse on unknown names.
Design builtin_design(const std::string& spec);

// Maps labels '0'..'9','a','b','c' to point indices 0..12.
int sts13_point(char label);

// --- text format ---
//
//   # optional comment lines
//   v k
//   p_1 p_2 ... p_k      (one line per block, strictly increasing, 0-based)

Design read_design(std::istream& in);
void write_design(std::ostream& out, const Design& design);
Design load_design(const std::string& path);
void save_design(const Design& design, const std::string& path);

// --- resolutions ---

// Partition of the block set into classes of pairwise disjoint blocks that
// each cover every point. Throws kNotResolvable when none exists.
std::vector<std::vector<int>> parallel_classes(const Design& design);

}  // namespace ekr
