#include "ekr/exactnum.hpp"

#include <cmath>
#include <sstream>

#include "ekr/error.hpp"

namespace ekr {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = mp::gcd(num < 0 ? BigInt(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

BigInt Rational::floor() const {
  // cpp_int division truncates toward zero.
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) q += 1;
  return q;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
  auto to_int = [&](std::string_view part) {
    if (part.empty()) throw ParseError("empty rational component in '" + std::string(text) + "'", 0);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("bad rational '" + std::string(text) + "'", 0);
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') {
        throw ParseError("bad rational '" + std::string(text) + "'", 0);
      }
    }
    return BigInt(std::string(part[0] == '+' ? part.substr(1) : part));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(text), 1);
  return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt isqrt(const BigInt& value) {
  if (value < 0) throw Error(ErrorCode::kDomain, "isqrt of negative value");
  if (value == 0) return 0;
  return mp::sqrt(value);
}

RootBracket iroot_floor(const BigInt& value, unsigned degree) {
  if (value < 0) throw Error(ErrorCode::kDomain, "integer root of negative value");
  if (degree == 0) throw Error(ErrorCode::kDomain, "integer root of degree 0");
  RootBracket out{value, degree, 0};
  if (value < 2 || degree == 1) {
    out.floor_root = value;
    return out;
  }
  // Root is below 2^(bits/degree + 1).
  const unsigned bits = static_cast<unsigned>(mp::msb(value)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / degree + 1);
  // Invariant: lo^degree <= value < hi^degree.
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (mp::pow(mid, degree) <= value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.floor_root = lo;
  return out;
}

namespace {

// Sign of a + b*sqrt(n).
int sign_single(const Rational& a, const Rational& b, const BigInt& n) {
  const int sa = a.sign();
  const int sb = n == 0 ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const auto c = (a * a) <=> (b * b * Rational::from_int(n));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

}  // namespace

int sign_of(const Rational& x, const Rational& y, const BigInt& m, const Rational& z,
            const BigInt& n) {
  if (m < 0 || n < 0) throw Error(ErrorCode::kDomain, "negative radicand");
  // P = x + y*sqrt(m), Q = z*sqrt(n).
  const int sp = sign_single(x, y, m);
  const int sq = n == 0 ? 0 : z.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger magnitude wins. P^2 - Q^2 is again a single surd.
  const Rational two_xy = Rational(2) * x * y;
  const int d = sign_single(x * x + y * y * Rational::from_int(m) - z * z * Rational::from_int(n),
                            two_xy, m);
  if (d > 0) return sp;
  if (d < 0) return sq;
  return 0;
}

std::strong_ordering cmp_surd(const SurdExpr& lhs, const SurdExpr& rhs) {
  return ordering_from_sign(sign_of(lhs.a - rhs.a, lhs.b, lhs.n, -rhs.b, rhs.n));
}

std::strong_ordering cmp_double_surd(const Rational& p, const Rational& q, const BigInt& m,
                                     const Rational& s, const Rational& t, const BigInt& n) {
  return ordering_from_sign(sign_of(p - s, q, m, -t, n));
}

SurdExpr SurdExpr::normalized() const {
  if (n < 0) throw Error(ErrorCode::kDomain, "negative radicand");
  SurdExpr out = *this;
  if (out.b.sign() == 0 || out.n == 0) {
    out.b = Rational(0);
    out.n = 0;
    return out;
  }
  for (unsigned d = 2; d <= 1000; ++d) {
    const unsigned d2 = d * d;
    if (out.n < d2) break;
    while (out.n % d2 == 0) {
      out.n /= d2;
      out.b *= Rational(d);
    }
  }
  const BigInt s = isqrt(out.n);
  if (s * s == out.n) {
    out.a += out.b * Rational::from_int(s);
    out.b = Rational(0);
    out.n = 0;
  }
  return out;
}

double SurdExpr::approx() const {
  return a.to_double() + b.to_double() * std::sqrt(n.convert_to<double>());
}

std::string SurdExpr::str() const {
  std::ostringstream os;
  os << a.str() << " + " << b.str() << "*sqrt(" << n.str() << ")";
  return os.str();
}

BigInt floor_of(const SurdExpr& value) {
  if (value.b.sign() == 0 || value.n == 0) return value.a.floor();
  // Fixed-point estimate, then exact correction.
  const BigInt scale = BigInt(1) << 64;
  const BigInt root_scaled = isqrt(value.n * scale * scale);
  const Rational estimate =
      value.a + value.b * Rational(root_scaled, scale);
  BigInt c = estimate.floor();
  auto at_least = [&](const BigInt& t) {
    return cmp_surd(value, SurdExpr::rational(Rational::from_int(t))) >= 0;
  };
  while (!at_least(c)) c -= 1;
  while (at_least(c + 1)) c += 1;
  return c;
}

int CubeRootExpr::sign() const {
  const RootBracket cube = iroot_floor(m, 3);
  if (cube.floor_root * cube.floor_root * cube.floor_root == m) {
    const Rational y = Rational::from_int(cube.floor_root);
    return (c0 + c1 * y + c2 * y * y).sign();
  }
  const Rational mm = Rational::from_int(m);
  const Rational norm = c0 * c0 * c0 + mm * c1 * c1 * c1 + mm * mm * c2 * c2 * c2 -
                        Rational(3) * mm * c0 * c1 * c2;
  return norm.sign();
}

double CubeRootExpr::approx() const {
  const double y = std::cbrt(m.convert_to<double>());
  return c0.to_double() + c1.to_double() * y + c2.to_double() * y * y;
}

std::string CubeRootExpr::str() const {
  std::ostringstream os;
  os << c0.str() << " + " << c1.str() << "*cbrt(" << m.str() << ") + " << c2.str() << "*cbrt("
     << m.str() << ")^2";
  return os.str();
}

BigInt floor_of(const CubeRootExpr& value) {
  BigInt c(static_cast<long long>(std::floor(value.approx())));
  auto at_least = [&](const BigInt& t) {
    CubeRootExpr shifted = value;
    shifted.c0 -= Rational::from_int(t);
    return shifted.sign() >= 0;
  };
  while (!at_least(c)) c -= 1;
  while (at_least(c + 1)) c += 1;
  return c;
}

}  // namespace ekr
