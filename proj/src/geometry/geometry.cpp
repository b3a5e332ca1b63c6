#include "ekr/geometry.hpp"

#include <algorithm>
#include <string>

#include "ekr/error.hpp"

namespace ekr::geom {

namespace {

constexpr std::uint64_t kMaxCoordinateSpace = 1ull << 26;

std::uint64_t coordinate_key(const std::vector<gf::Elem>& coords, std::uint32_t n) {
  std::uint64_t key = 0;
  for (gf::Elem c : coords) key = key * n + c;
  return key;
}

}  // namespace

ProjPoint normalize(const gf::Field& field, std::vector<gf::Elem> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](gf::Elem c) { return c != 0; });
  if (lead == coords.end()) throw Error(ErrorCode::kDomain, "zero vector is not a projective point");
  const gf::Elem scale = field.inv(*lead);
  for (gf::Elem& c : coords) c = field.mul(c, scale);
  return ProjPoint{std::move(coords)};
}

std::vector<ProjPoint> projective_points(const gf::Field& field, int dim) {
  if (dim < 1) throw Error(ErrorCode::kDomain, "projective dimension must be >= 1");
  const std::uint32_t n = field.order();
  const std::size_t len = static_cast<std::size_t>(dim) + 1;
  std::vector<ProjPoint> points;
  // Leading 1 at position `lead`; later leads sort first since they start with zeros.
  for (int lead = dim; lead >= 0; --lead) {
    const std::size_t free = len - static_cast<std::size_t>(lead) - 1;
    std::vector<gf::Elem> tail(free, 0);
    while (true) {
      std::vector<gf::Elem> coords(len, 0);
      coords[lead] = 1;
      std::copy(tail.begin(), tail.end(), coords.begin() + lead + 1);
      points.push_back(ProjPoint{std::move(coords)});
      // Odometer, last coordinate fastest.
      std::size_t i = free;
      while (i > 0) {
        if (++tail[i - 1] < n) break;
        tail[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return points;
}

gf::Elem dot(const gf::Field& field, const std::vector<gf::Elem>& a,
             const std::vector<gf::Elem>& b) {
  gf::Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = field.add(s, field.mul(a[i], b[i]));
  return s;
}

std::vector<gf::Elem> line_through(const gf::Field& field, const ProjPoint& a,
                                   const ProjPoint& b) {
  const auto& x = a.coords;
  const auto& y = b.coords;
  auto det = [&](int i, int j) { return field.sub(field.mul(x[i], y[j]), field.mul(x[j], y[i])); };
  return {det(1, 2), det(2, 0), det(0, 1)};
}

LineSystem pg_lines(int dim, std::uint64_t q) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kDomain, "pg_lines supports dimension 2 or 3");
  const gf::Field field = gf::Field::of_order(q);
  const std::uint32_t n = field.order();
  std::uint64_t space = 1;
  for (int i = 0; i <= dim; ++i) space *= n;
  if (space > kMaxCoordinateSpace) {
    throw Error(ErrorCode::kDomain, "PG(" + std::to_string(dim) + "," + std::to_string(q) +
                                        ") is beyond desk scale");
  }

  LineSystem out;
  out.points = projective_points(field, dim);
  const int v = static_cast<int>(out.points.size());
  std::vector<int> index_of(space, -1);
  for (int i = 0; i < v; ++i) index_of[coordinate_key(out.points[i].coords, n)] = i;

  std::vector<std::uint8_t> covered(static_cast<std::size_t>(v) * v, 0);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (covered[static_cast<std::size_t>(i) * v + j]) continue;
      std::vector<int> line{i};
      const auto& pi = out.points[i].coords;
      const auto& pj = out.points[j].coords;
      for (gf::Elem t = 0; t < n; ++t) {
        std::vector<gf::Elem> c(pj.size());
        for (std::size_t d = 0; d < c.size(); ++d) c[d] = field.add(pj[d], field.mul(t, pi[d]));
        line.push_back(index_of[coordinate_key(normalize(field, std::move(c)).coords, n)]);
      }
      std::sort(line.begin(), line.end());
      for (std::size_t a = 0; a < line.size(); ++a) {
        for (std::size_t b = a + 1; b < line.size(); ++b) {
          covered[static_cast<std::size_t>(line[a]) * v + line[b]] = 1;
        }
      }
      out.lines.push_back(std::move(line));
    }
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

std::vector<ProjPoint> hermitian_points(std::uint64_t q) {
  auto pe = gf::prime_power(q);
  if (!pe) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q * q > gf::kMaxFieldOrder) throw Error(ErrorCode::kDomain, "q^2 exceeds 2^16");
  return hermitian_points(gf::Field::of_order(q * q), q);
}

std::vector<ProjPoint> hermitian_points(const gf::Field& field, std::uint64_t q) {
  const std::uint32_t n = field.order();
  if (static_cast<std::uint64_t>(n) != q * q) throw Error(ErrorCode::kDomain, "field order must be q^2");
  // Bucket elements by their norm x^(q+1).
  std::vector<gf::Elem> norm(n);
  std::vector<std::vector<gf::Elem>> with_norm(n);
  for (gf::Elem x = 0; x < n; ++x) {
    norm[x] = field.pow(x, q + 1);
    with_norm[norm[x]].push_back(x);
  }
  std::vector<ProjPoint> points;
  // (0, 1, z): N(z) = -1.
  for (gf::Elem z : with_norm[field.neg(1)]) points.push_back(ProjPoint{{0, 1, z}});
  // (1, y, z): N(z) = -(1 + N(y)).
  for (gf::Elem y = 0; y < n; ++y) {
    const gf::Elem target = field.neg(field.add(1, norm[y]));
    for (gf::Elem z : with_norm[target]) points.push_back(ProjPoint{{1, y, z}});
  }
  // (0, 0, 1) has norm sum 1 and is never on the curve.
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace ekr::geom
