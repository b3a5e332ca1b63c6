#include "ekr/ekr.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ekr/canonical.hpp"
#include "ekr/error.hpp"

namespace ekr {

EnumerationResult enumerate_maximal_ekr(const Design& design, const EnumerateOptions& options) {
  CliqueOptions copt;
  copt.min_size = options.min_size;
  copt.max_count = options.max_count;
  copt.workers = options.workers;
  copt.keep_cliques = !options.size_only;
  auto cliques = maximal_cliques(intersection_graph(design), copt);

  EnumerationResult out;
  out.size_counts = std::move(cliques.size_counts);
  out.total = cliques.total;
  out.families.reserve(cliques.cliques.size());
  for (const auto& c : cliques.cliques) out.families.push_back(BlockSet::of(design, c));
  return out;
}

MaxEkr max_ekr_size(const Design& design) {
  const auto pencil = design.blocks_through(0);
  const auto best = maximum_clique(intersection_graph(design),
                                   std::vector<int>(pencil.begin(), pencil.end()));
  return MaxEkr{static_cast<int>(best.size()), BlockSet::of(design, best)};
}

std::optional<std::array<int, 4>> find_onan(const Design& design) {
  const auto adj = intersection_graph(design);
  const int b = design.b();
  std::vector<BitSet> pencil(design.v(), BitSet(b));
  for (int p = 0; p < design.v(); ++p) {
    for (int bi : design.blocks_through(p)) pencil[p].set(bi);
  }
  BitSet n12(b), cand(b);
  for (int b1 = 0; b1 < b; ++b1) {
    for (int b2 = adj[b1].next(b1 + 1); b2 >= 0; b2 = adj[b1].next(b2 + 1)) {
      const int p12 = design.meet(b1, b2);
      BitSet::assign_and(n12, adj[b1], adj[b2]);
      n12.subtract(pencil[p12]);
      for (int b3 = n12.next(b2 + 1); b3 >= 0; b3 = n12.next(b3 + 1)) {
        const int p13 = design.meet(b1, b3);
        const int p23 = design.meet(b2, b3);
        BitSet::assign_and(cand, n12, adj[b3]);
        cand.subtract(pencil[p13]);
        cand.subtract(pencil[p23]);
        const int b4 = cand.next(b3 + 1);
        if (b4 >= 0) return std::array<int, 4>{b1, b2, b3, b4};
      }
    }
  }
  return std::nullopt;
}

std::string type_label(const BlockSet& family) {
  const Design& d = family.design();
  if (pencil_point(family)) return "pencil";
  const int k = d.k();
  if (k == 3) return "EKR_" + std::to_string(family.size());
  if (triangle_witness(family)) return "triangle";
  const int plane = k * k - k + 1;
  if (family.size() == plane && cover_profile(family).covered == plane) return "plane";
  return "other";
}

std::vector<TypeCount> classify(const Design& design, std::span<const BlockSet> families) {
  std::map<std::string, std::size_t> slot;
  std::vector<TypeCount> types;
  for (const auto& fam : families) {
    if (&fam.design() != &design) {
      throw Error(ErrorCode::kDomain, "family belongs to a different design");
    }
    auto code = family_canonical_code(fam);
    auto it = slot.find(code);
    if (it != slot.end()) {
      ++types[it->second].count;
      continue;
    }
    slot.emplace(code, types.size());
    EkrType t{fam.size(), cover_profile(fam), std::move(code), type_label(fam)};
    types.push_back(TypeCount{std::move(t), 1, fam});
  }
  std::sort(types.begin(), types.end(), [](const TypeCount& a, const TypeCount& b) {
    if (a.type.size != b.type.size) return a.type.size > b.type.size;
    if (a.type.label != b.type.label) return a.type.label < b.type.label;
    return a.type.canonical_code < b.type.canonical_code;
  });
  return types;
}

OnanFreeVerdict classify_onan_free(const Design& design, int workers) {
  if (const auto q = find_onan(design)) {
    throw Error(ErrorCode::kHasONan,
                "O'Nan configuration on blocks " + std::to_string((*q)[0]) + " " +
                    std::to_string((*q)[1]) + " " + std::to_string((*q)[2]) + " " +
                    std::to_string((*q)[3]));
  }
  EnumerateOptions opt;
  opt.workers = workers;
  const auto all = enumerate_maximal_ekr(design, opt);
  OnanFreeVerdict verdict;
  verdict.families = all.total;
  for (const auto& fam : all.families) {
    if (pencil_point(fam)) {
      ++verdict.pencils;
    } else if (triangle_witness(fam)) {
      ++verdict.triangles;
    } else if (!verdict.counterexample) {
      verdict.counterexample = fam;
    }
  }
  verdict.confirmed = !verdict.counterexample;
  return verdict;
}

}  // namespace ekr
