#include <algorithm>

#include "ekr/design.hpp"
#include "ekr/error.hpp"

namespace ekr {

namespace {

// Exact cover of the points by disjoint blocks, repeated until every block is
// used. Each class is found by always covering the lowest uncovered point.
class Resolver {
 public:
  explicit Resolver(const Design& d)
      : d_(d), used_(d.b(), false), covered_(d.v(), false) {}

  bool solve(std::vector<std::vector<int>>& classes) {
    const int n_classes = d_.r();
    if (static_cast<int>(classes.size()) == n_classes) return true;
    std::vector<int> current;
    return fill(classes, current);
  }

 private:
  bool fill(std::vector<std::vector<int>>& classes, std::vector<int>& current) {
    int p = 0;
    while (p < d_.v() && covered_[p]) ++p;
    if (p == d_.v()) {
      classes.push_back(current);
      std::fill(covered_.begin(), covered_.end(), false);
      if (solve(classes)) return true;
      classes.pop_back();
      for (int bi : current) {
        for (int x : d_.block(bi)) covered_[x] = true;
      }
      return false;
    }
    for (int bi : d_.blocks_through(p)) {
      if (used_[bi]) continue;
      bool ok = true;
      for (int x : d_.block(bi)) {
        if (covered_[x]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_[bi] = true;
      for (int x : d_.block(bi)) covered_[x] = true;
      current.push_back(bi);
      if (fill(classes, current)) return true;
      current.pop_back();
      for (int x : d_.block(bi)) covered_[x] = false;
      used_[bi] = false;
    }
    return false;
  }

  const Design& d_;
  std::vector<bool> used_;
  std::vector<bool> covered_;
};

}  // namespace

std::vector<std::vector<int>> parallel_classes(const Design& design) {
  if (design.v() % design.k() != 0) {
    throw Error(ErrorCode::kNotResolvable, "v is not divisible by k");
  }
  std::vector<std::vector<int>> classes;
  Resolver solver(design);
  if (!solver.solve(classes)) throw Error(ErrorCode::kNotResolvable, "no resolution exists");
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

}  // namespace ekr
