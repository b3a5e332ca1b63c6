#include "ekr/gf.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ekr/error.hpp"

namespace ekr::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials, coefficients lowest degree first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

bool is_irreducible(std::uint32_t p, const Poly& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool has_tabulated_modulus(std::uint32_t p, std::uint32_t e) {
  return conway_table().count({p, e}) > 0;
}

FieldSpec FieldSpec::standard(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p) || e == 0) {
    throw Error(ErrorCode::kNotPrimePower, "invalid field characteristic/exponent");
  }
  FieldSpec spec{p, e, {}};
  if (e == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  if (auto it = conway_table().find({p, e}); it != conway_table().end()) {
    spec.modulus = it->second;
    return spec;
  }
  // Lexicographically least monic irreducible: constant term varies fastest.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly g(e + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[e] = 1;
    if (g[0] != 0 && is_irreducible(p, g)) {
      spec.modulus = g;
      return spec;
    }
  }
  throw Error(ErrorCode::kDomain, "no irreducible polynomial found");
}

FieldSpec FieldSpec::for_order(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) {
    throw Error(ErrorCode::kDomain, "field order " + std::to_string(q) + " exceeds 2^16");
  }
  return standard(pe->first, pe->second);
}

std::uint32_t FieldSpec::order() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < e; ++i) n *= p;
  return static_cast<std::uint32_t>(n);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p) || spec_.e == 0) {
    throw Error(ErrorCode::kNotPrimePower, "invalid field spec");
  }
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    n *= spec_.p;
    if (n > kMaxFieldOrder) throw Error(ErrorCode::kDomain, "field order exceeds 2^16");
  }
  order_ = static_cast<std::uint32_t>(n);
  if (spec_.modulus.size() != spec_.e + 1 || spec_.modulus.back() != 1) {
    throw Error(ErrorCode::kDomain, "modulus must be monic of degree e");
  }
  if (!is_irreducible(spec_.p, spec_.modulus)) {
    throw Error(ErrorCode::kDomain, "modulus is reducible");
  }
  exp_.assign(order_, 0);
  log_.assign(order_, 0);
  // Smallest element of multiplicative order p^e - 1.
  for (Elem g = 1; g < order_; ++g) {
    Elem x = 1;
    std::uint32_t i = 0;
    bool primitive = true;
    for (; i < order_ - 1; ++i) {
      exp_[i] = x;
      x = poly_mul(x, g);
      if (x == 1 && i + 1 < order_ - 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  exp_[order_ - 1] = 1;
  for (std::uint32_t i = 0; i + 1 < order_; ++i) log_[exp_[i]] = i;
}

Elem Field::poly_mul(Elem a, Elem b) const {
  const std::uint32_t p = spec_.p;
  const std::uint32_t e = spec_.e;
  if (e == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  Poly fa(e), fb(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    fa[i] = a % p;
    a /= p;
    fb[i] = b % p;
    b /= p;
  }
  Poly prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p);
    }
  }
  Poly r = poly_rem(prod, spec_.modulus, p);
  Elem out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a ^ b;
  if (spec_.e == 1) return (a + b) % p;
  Elem out = 0, place = 1;
  while (a || b) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a;
  if (spec_.e == 1) return a == 0 ? 0 : p - a;
  Elem out = 0, place = 1;
  while (a) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in GF(" + std::to_string(order_) + ")");
  if (a == 1) return 1;
  return exp_[order_ - 1 - log_[a]];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (n % (order_ - 1)) % (order_ - 1);
  return exp_[l];
}

}  // namespace ekr::gf
