#pragma once

// Point and line sets of PG(d,q) and the Hermitian curve of PG(2,q^2).
// Points are indexed densely in lexicographic order of their normalized
// homogeneous coordinates.

#include <compare>
#include <cstdint>
#include <vector>

#include "ekr/gf.hpp"

namespace ekr::geom {

// First nonzero coordinate is 1.
struct ProjPoint {
  std::vector<gf::Elem> coords;

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Scales `coords` so the first nonzero entry is 1; throws kDomain on zero.
ProjPoint normalize(const gf::Field& field, std::vector<gf::Elem> coords);

// All points of PG(dim, |field|), lexicographically sorted.
std::vector<ProjPoint> projective_points(const gf::Field& field, int dim);

struct LineSystem {
  std::vector<ProjPoint> points;
  std::vector<std::vector<int>> lines;  // sorted point indices, list sorted
};

// dim is 2 or 3.
LineSystem pg_lines(int dim, std::uint64_t q);

// Points of X0^(q+1) + X1^(q+1) + X2^(q+1) = 0 in PG(2, q^2), sorted.
std::vector<ProjPoint> hermitian_points(std::uint64_t q);
std::vector<ProjPoint> hermitian_points(const gf::Field& field_q2, std::uint64_t q);

// Dot product of homogeneous coordinates; a point lies on the line with
// dual coordinates `line` iff this is zero.
gf::Elem dot(const gf::Field& field, const std::vector<gf::Elem>& a,
             const std::vector<gf::Elem>& b);

// Dual coordinates of the line through two distinct points of PG(2,q).
std::vector<gf::Elem> line_through(const gf::Field& field, const ProjPoint& a,
                                   const ProjPoint& b);

}  // namespace ekr::geom
