#pragma once

// Finite fields GF(p^e) of at most 2^16 elements. Elements are encoded as
// integers 0..p^e-1 whose base-p digits are polynomial coefficients (lowest
// degree first) modulo a fixed monic irreducible polynomial.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ekr::gf {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);
// (p, e) with q = p^e, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Coefficients lowest degree first; trailing coefficient must be nonzero.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;  // monic, degree e

  // Shipped Conway polynomial when available, otherwise the lexicographically
  // least monic irreducible polynomial of degree e.
  static FieldSpec standard(std::uint32_t p, std::uint32_t e);
  // Throws kNotPrimePower / kDomain.
  static FieldSpec for_order(std::uint64_t q);

  std::uint32_t order() const;
};

// True when the (p, e) modulus comes from the shipped table.
bool has_tabulated_modulus(std::uint32_t p, std::uint32_t e);

class Field {
 public:
  explicit Field(FieldSpec spec);
  static Field of_order(std::uint64_t q) { return Field(FieldSpec::for_order(q)); }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return spec_.p; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;  // throws kDivisionByZero on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  Elem frobenius(Elem a) const { return pow(a, spec_.p); }
  Elem primitive_element() const { return exp_[order_ > 1 ? 1 : 0]; }

 private:
  Elem poly_mul(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace ekr::gf
