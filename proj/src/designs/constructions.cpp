#include <array>
#include <charconv>
#include <string>
#include <string_view>

#include "ekr/design.hpp"
#include "ekr/error.hpp"
#include "ekr/geometry.hpp"

namespace ekr {

namespace {

int checked_prime_power(int q) {
  if (q < 2 || !gf::prime_power(static_cast<std::uint64_t>(q))) {
    throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  }
  return q;
}

Design from_lines(const geom::LineSystem& ls) {
  const int k = static_cast<int>(ls.lines.front().size());
  return Design::validate(static_cast<int>(ls.points.size()), k, ls.lines);
}

// Block j is {kRowA[j], kRowB[j], kRowC[variant - 1][j]}.
constexpr std::string_view kRowA = "00000011111222223334445556";
constexpr std::string_view kRowB = "13579b3469a3467867868a7897";
constexpr std::array<std::string_view, 2> kRowC = {
    "2468ac578bc95acbbacc9bbac9",
    "2468ac578bc95abcbcac9babc9",
};

}  // namespace

Design projective_plane(int q) {
  checked_prime_power(q);
  return from_lines(geom::pg_lines(2, static_cast<std::uint64_t>(q)));
}

Design pg3_line_design(int q) {
  checked_prime_power(q);
  return from_lines(geom::pg_lines(3, static_cast<std::uint64_t>(q)));
}

Design affine_plane(int q) {
  checked_prime_power(q);
  const gf::Field f = gf::Field::of_order(static_cast<std::uint64_t>(q));
  auto pt = [q](gf::Elem x, gf::Elem y) { return static_cast<int>(x) * q + static_cast<int>(y); };
  std::vector<std::vector<int>> blocks;
  for (gf::Elem m = 0; m < static_cast<gf::Elem>(q); ++m) {
    for (gf::Elem c = 0; c < static_cast<gf::Elem>(q); ++c) {
      std::vector<int> line;
      for (gf::Elem x = 0; x < static_cast<gf::Elem>(q); ++x) {
        line.push_back(pt(x, f.add(f.mul(m, x), c)));
      }
      blocks.push_back(std::move(line));
    }
  }
  for (gf::Elem c = 0; c < static_cast<gf::Elem>(q); ++c) {
    std::vector<int> line;
    for (gf::Elem y = 0; y < static_cast<gf::Elem>(q); ++y) line.push_back(pt(c, y));
    blocks.push_back(std::move(line));
  }
  return Design::validate(q * q, q, std::move(blocks));
}

Design hermitian_unital(int q) {
  checked_prime_power(q);
  const auto uq = static_cast<std::uint64_t>(q);
  if (uq * uq > gf::kMaxFieldOrder) throw Error(ErrorCode::kDomain, "q^2 exceeds 2^16");
  const gf::Field f = gf::Field::of_order(uq * uq);
  const auto pts = geom::hermitian_points(f, uq);
  const int v = static_cast<int>(pts.size());
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(v) * v, 0);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (covered[static_cast<std::size_t>(i) * v + j]) continue;
      const auto line = geom::line_through(f, pts[i], pts[j]);
      std::vector<int> secant;
      for (int h = 0; h < v; ++h) {
        if (geom::dot(f, line, pts[h].coords) == 0) secant.push_back(h);
      }
      for (int a : secant) {
        for (int c : secant) covered[static_cast<std::size_t>(a) * v + c] = 1;
      }
      blocks.push_back(std::move(secant));
    }
  }
  return Design::validate(v, q + 1, std::move(blocks));
}

Design complete_graph(int v) {
  if (v < 3) throw Error(ErrorCode::kDomain, "complete graph design needs v >= 3");
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < v; ++a) {
    for (int c = a + 1; c < v; ++c) blocks.push_back({a, c});
  }
  return Design::validate(v, 2, std::move(blocks));
}

int sts13_point(char label) {
  if (label >= '0' && label <= '9') return label - '0';
  if (label >= 'a' && label <= 'c') return 10 + (label - 'a');
  throw Error(ErrorCode::kDomain, std::string("not an STS(13) label: ") + label);
}

Design sts13(int variant) {
  if (variant != 1 && variant != 2) {
    throw Error(ErrorCode::kDomain, "sts13 variant must be 1 or 2");
  }
  const std::string_view row_c = kRowC[static_cast<std::size_t>(variant - 1)];
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = 0; j < kRowA.size(); ++j) {
    blocks.push_back({sts13_point(kRowA[j]), sts13_point(kRowB[j]), sts13_point(row_c[j])});
  }
  return Design::validate(13, 3, std::move(blocks));
}

Design builtin_design(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParseError("design spec must look like name:param, got '" + spec + "'", 0);
  }
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  int param = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), param);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw ParseError("bad design parameter '" + arg + "'", 0);
  }
  if (name == "projective" || name == "pg2") return projective_plane(param);
  if (name == "affine" || name == "ag2") return affine_plane(param);
  if (name == "hermitian-unital" || name == "unital") return hermitian_unital(param);
  if (name == "pg3") return pg3_line_design(param);
  if (name == "kgraph" || name == "complete") return complete_graph(param);
  if (name == "sts13") return sts13(param);
  throw ParseError("unknown design '" + name + "'", 0);
}

}  // namespace ekr
