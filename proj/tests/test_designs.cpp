#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ekr/design.hpp"
#include "ekr/error.hpp"

using namespace ekr;

namespace {

const std::vector<std::vector<int>> kFano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                             {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kDomain;
}

void check_steiner(const Design& d) {
  const int v = d.v();
  std::vector<int> seen(static_cast<std::size_t>(v) * v, 0);
  for (const auto& blk : d.blocks()) {
    CHECK(static_cast<int>(blk.size()) == d.k());
    for (std::size_t i = 0; i < blk.size(); ++i) {
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++seen[blk[i] * v + blk[j]];
    }
  }
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) CHECK(seen[p * v + q] == 1);
  }
}

}  // namespace

TEST_CASE("Fano plane validates") {
  const auto d = Design::validate(7, 3, kFano);
  CHECK(d.r() == 3);
  CHECK(d.b() == 7);
  CHECK(d == projective_plane(2));
  auto short_list = kFano;
  short_list.pop_back();
  CHECK(code_of([&] { Design::validate(7, 3, short_list); }) == ErrorCode::kPairUncovered);
  auto doubled = kFano;
  doubled[6] = {0, 1, 3};
  CHECK(code_of([&] { Design::validate(7, 3, doubled); }) == ErrorCode::kPairRepeated);
  CHECK(code_of([&] { Design::validate(7, 3, {{0, 1}}); }) == ErrorCode::kInvalidBlock);
  CHECK(code_of([&] { Design::validate(7, 3, {{0, 1, 7}}); }) == ErrorCode::kInvalidBlock);
  CHECK(code_of([&] { Design::validate(3, 3, {{0, 1, 2}}); }) == ErrorCode::kParameterMismatch);
}

TEST_CASE("validation reports the offending pair") {
  auto blocks = kFano;
  blocks.erase(blocks.begin() + 3);  // {1,3,5}
  try {
    Design::validate(7, 3, blocks);
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::kPairUncovered);
    CHECK(e.point_a == 1);
    CHECK(e.point_b == 3);
  }
}

TEST_CASE("constructions have the expected parameters") {
  struct Row {
    const char* spec;
    int v, k, b, r;
  };
  for (const Row& row : {Row{"projective:2", 7, 3, 7, 3}, Row{"projective:3", 13, 4, 13, 4},
                         Row{"affine:3", 9, 3, 12, 4}, Row{"affine:4", 16, 4, 20, 5},
                         Row{"hermitian-unital:2", 9, 3, 12, 4},
                         Row{"hermitian-unital:3", 28, 4, 63, 9}, Row{"pg3:2", 15, 3, 35, 7},
                         Row{"pg3:3", 40, 4, 130, 13}, Row{"kgraph:7", 7, 2, 21, 6},
                         Row{"sts13:1", 13, 3, 26, 6}, Row{"sts13:2", 13, 3, 26, 6}}) {
    CAPTURE(row.spec);
    const auto d = builtin_design(row.spec);
    CHECK(d.v() == row.v);
    CHECK(d.k() == row.k);
    CHECK(d.b() == row.b);
    CHECK(d.r() == row.r);
    CHECK(d.params().R == (row.k - 1) * (row.k - 1) - row.r);
    check_steiner(d);
  }
  // v = k^3 - 2k^2 + 2k for the PG(3,2) line design
  CHECK(pg3_line_design(2).v() == 27 - 18 + 6);
  CHECK_THROWS_AS(builtin_design("nosuch:3"), ParseError);
  CHECK_THROWS_AS(builtin_design("affine:x"), ParseError);
  CHECK(code_of([] { affine_plane(6); }) == ErrorCode::kNotPrimePower);
}

TEST_CASE("the two STS(13) designs differ in six blocks") {
  const auto a = sts13(1), b = sts13(2);
  const std::set<std::vector<int>> sa(a.blocks().begin(), a.blocks().end());
  std::size_t diff = 0;
  for (const auto& blk : b.blocks()) diff += sa.count(blk) == 0;
  CHECK(diff == 6);
  CHECK(sts13_point('0') == 0);
  CHECK(sts13_point('a') == 10);
  CHECK(sts13_point('c') == 12);
  CHECK(a.find_block({0, 1, 2}).has_value());
  CHECK_THROWS(sts13(3));
}

TEST_CASE("block queries") {
  const auto d = projective_plane(2);
  CHECK(d.block_through(0, 1) == *d.find_block({0, 1, 2}));
  CHECK(d.on_block(2, d.block_through(0, 1)));
  CHECK(d.blocks_through(0).size() == 3);
  const auto ag = affine_plane(3);
  int disjoint = 0;
  for (int i = 0; i < ag.b(); ++i) {
    for (int j = i + 1; j < ag.b(); ++j) disjoint += ag.meet(i, j) < 0;
  }
  CHECK(disjoint == 4 * 3);  // 4 classes, 3 disjoint pairs each
}

TEST_CASE("text format round trip") {
  for (const char* spec : {"projective:2", "affine:3", "hermitian-unital:3"}) {
    const auto d = builtin_design(spec);
    std::stringstream ss;
    write_design(ss, d);
    CHECK(read_design(ss) == d);
  }
  std::istringstream ag("# AG(2,3)\n9 3\n0 1 2\n3 4 5\n6 7 8\n0 3 6\n1 4 7\n2 5 8\n"
                        "0 4 8\n1 5 6\n2 3 7\n0 5 7\n1 3 8\n2 4 6\n");
  CHECK(read_design(ag).b() == 12);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_design(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("7 3\n0 1 2\n0 3\n") == 3);
  CHECK(line_of("# c\n\n7 3\n0 1 2\n0 4 3\n") == 5);
  CHECK(line_of("7\n") == 1);
  CHECK(line_of("7 3\n0 1 x\n") == 2);
  CHECK(line_of("7 3\n0 1 9\n") == 2);
  std::istringstream uncovered("7 3\n0 1 2\n");
  CHECK(code_of([&] { read_design(uncovered); }) == ErrorCode::kPairUncovered);
  CHECK(code_of([] { load_design("/nonexistent/dir/file.dsn"); }) == ErrorCode::kIo);
}

TEST_CASE("parallel classes") {
  auto check_resolution = [](const Design& d, std::size_t classes, std::size_t per_class) {
    const auto res = parallel_classes(d);
    CHECK(res.size() == classes);
    std::set<int> used;
    for (const auto& cls : res) {
      CHECK(cls.size() == per_class);
      std::vector<int> cover(d.v(), 0);
      for (int blk : cls) {
        CHECK(used.insert(blk).second);
        for (int p : d.block(blk)) ++cover[p];
      }
      CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
    }
    CHECK(used.size() == static_cast<std::size_t>(d.b()));
  };
  check_resolution(affine_plane(3), 4, 3);
  check_resolution(affine_plane(4), 5, 4);
  check_resolution(pg3_line_design(2), 7, 5);
  CHECK(code_of([] { parallel_classes(projective_plane(2)); }) == ErrorCode::kNotResolvable);
  CHECK(code_of([] { parallel_classes(sts13(1)); }) == ErrorCode::kNotResolvable);
}
