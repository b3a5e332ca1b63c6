#pragma once

// Exact arithmetic: rationals, numbers of the form a + b*sqrt(n), and
// integer k-th roots. Every inequality used by the bound formulas is decided
// here without floating point.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;

// Always reduced, denominator strictly positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);
  static Rational from_int(const BigInt& value) { return Rational(value, 1); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const;

  // "num/den", denominator always printed.
  std::string str() const;
  // Accepts "n", "n/d" (d may be negative; result is normalized).
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

// a + b*sqrt(n), n >= 0. The radicand need not be square-free.
struct SurdExpr {
  Rational a;
  Rational b;
  BigInt n;

  static SurdExpr rational(const Rational& value) { return {value, Rational(0), BigInt(0)}; }
  static SurdExpr root(const BigInt& radicand, const Rational& coef = Rational(1)) {
    return {Rational(0), coef, radicand};
  }

  // Pulls square factors d^2 with d <= 1000 out of the radicand, folds exact
  // squares into `a`, and zeroes `b` when the radical vanishes.
  SurdExpr normalized() const;
  double approx() const;
  std::string str() const;
};

// c0 + c1*cbrt(m) + c2*cbrt(m)^2 with m >= 0.
struct CubeRootExpr {
  Rational c0;
  Rational c1;
  Rational c2;
  BigInt m;

  // Exact. For non-cube m this is the sign of the norm from Q(cbrt(m)),
  // since the two complex conjugates contribute a positive factor.
  int sign() const;
  double approx() const;
  std::string str() const;
};

// floor_root^degree <= value < (floor_root+1)^degree.
struct RootBracket {
  BigInt value;
  unsigned degree = 1;
  BigInt floor_root;
};

BigInt isqrt(const BigInt& value);
RootBracket iroot_floor(const BigInt& value, unsigned degree);

// Exact sign of x + y*sqrt(m) + z*sqrt(n).
int sign_of(const Rational& x, const Rational& y, const BigInt& m, const Rational& z,
            const BigInt& n);

std::strong_ordering cmp_surd(const SurdExpr& lhs, const SurdExpr& rhs);

// p + q*sqrt(m) versus s + t*sqrt(n).
std::strong_ordering cmp_double_surd(const Rational& p, const Rational& q, const BigInt& m,
                                     const Rational& s, const Rational& t, const BigInt& n);

// Exact floor of a + b*sqrt(n).
BigInt floor_of(const SurdExpr& value);
BigInt floor_of(const CubeRootExpr& value);

inline std::strong_ordering ordering_from_sign(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace ekr
