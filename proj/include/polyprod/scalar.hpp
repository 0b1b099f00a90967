#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <sstream>
#include <string>

#include "polyprod/errors.hpp"

namespace polyprod {

namespace bm = boost::multiprecision;

// ---------------------------------------------------------------------------
// Exact scalar types. Thin value wrappers so Eigen's scalar-promotion
// machinery sees plain, non-promiscuous types. All arithmetic is exact.
// ---------------------------------------------------------------------------

// Arbitrary-precision integer.
struct ZZ {
  bm::cpp_int v;

  ZZ() = default;
  ZZ(long long x) : v(x) {}
  ZZ(long x) : v(x) {}
  ZZ(int x) : v(x) {}
  explicit ZZ(bm::cpp_int x) : v(std::move(x)) {}

  friend ZZ operator+(const ZZ& a, const ZZ& b) { return ZZ(a.v + b.v); }
  friend ZZ operator-(const ZZ& a, const ZZ& b) { return ZZ(a.v - b.v); }
  friend ZZ operator*(const ZZ& a, const ZZ& b) { return ZZ(a.v * b.v); }
  ZZ operator-() const { return ZZ(-v); }
  ZZ& operator+=(const ZZ& o) { v += o.v; return *this; }
  ZZ& operator-=(const ZZ& o) { v -= o.v; return *this; }
  ZZ& operator*=(const ZZ& o) { v *= o.v; return *this; }
  friend bool operator==(const ZZ& a, const ZZ& b) { return a.v == b.v; }
  friend bool operator!=(const ZZ& a, const ZZ& b) { return a.v != b.v; }
  friend bool operator<(const ZZ& a, const ZZ& b) { return a.v < b.v; }
  friend bool operator<=(const ZZ& a, const ZZ& b) { return a.v <= b.v; }
  friend bool operator>(const ZZ& a, const ZZ& b) { return a.v > b.v; }
  friend bool operator>=(const ZZ& a, const ZZ& b) { return a.v >= b.v; }

  bool is_zero() const { return v.is_zero(); }
  friend std::ostream& operator<<(std::ostream& os, const ZZ& a) { return os << a.v; }
  std::string str() const { return v.str(); }
};

inline ZZ abs(const ZZ& a) { return ZZ(bm::abs(a.v)); }
inline ZZ gcd(const ZZ& a, const ZZ& b) { return ZZ(bm::gcd(a.v, b.v)); }
// Truncated quotient (rounds toward zero), |a - q*b| < |b|.
inline ZZ quot(const ZZ& a, const ZZ& b) { return ZZ(bm::cpp_int(a.v / b.v)); }
inline ZZ rem(const ZZ& a, const ZZ& b) { return ZZ(bm::cpp_int(a.v % b.v)); }
inline bool divides(const ZZ& a, const ZZ& b) {
  return a.is_zero() ? b.is_zero() : bm::cpp_int(b.v % a.v).is_zero();
}

// Rational numbers.
struct QQ {
  bm::cpp_rational v;

  QQ() = default;
  QQ(long long x) : v(x) {}
  QQ(long x) : v(x) {}
  QQ(int x) : v(x) {}
  QQ(long long num, long long den) : v(bm::cpp_rational(num, den)) {}
  explicit QQ(bm::cpp_rational x) : v(std::move(x)) {}
  explicit QQ(const ZZ& x) : v(x.v) {}

  friend QQ operator+(const QQ& a, const QQ& b) { return QQ(a.v + b.v); }
  friend QQ operator-(const QQ& a, const QQ& b) { return QQ(a.v - b.v); }
  friend QQ operator*(const QQ& a, const QQ& b) { return QQ(a.v * b.v); }
  friend QQ operator/(const QQ& a, const QQ& b) {
    if (b.v.is_zero()) throw InvariantViolation("QQ: division by zero");
    return QQ(a.v / b.v);
  }
  QQ operator-() const { return QQ(-v); }
  QQ& operator+=(const QQ& o) { v += o.v; return *this; }
  QQ& operator-=(const QQ& o) { v -= o.v; return *this; }
  QQ& operator*=(const QQ& o) { v *= o.v; return *this; }
  QQ& operator/=(const QQ& o) { *this = *this / o; return *this; }
  friend bool operator==(const QQ& a, const QQ& b) { return a.v == b.v; }
  friend bool operator!=(const QQ& a, const QQ& b) { return a.v != b.v; }

  bool is_zero() const { return v.is_zero(); }
  QQ inverse() const {
    if (v.is_zero()) throw InvariantViolation("QQ: inverse of zero");
    return QQ(bm::cpp_rational(1) / v);
  }
  friend std::ostream& operator<<(std::ostream& os, const QQ& a) { return os << a.v; }
  std::string str() const {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

// Prime field F_p with deferred modulus: a default-constructed element is an
// unattached integer literal that adopts the modulus of the first attached
// operand it meets. Only same-modulus values ever interact in practice.
struct Fp {
  std::int64_t v = 0;
  std::uint32_t p = 0;  // 0 = unattached literal

  Fp() = default;
  Fp(long long x) : v(x), p(0) {}
  Fp(long x) : v(x), p(0) {}
  Fp(int x) : v(x), p(0) {}
  Fp(std::uint32_t modulus, long long x) : p(modulus) { v = norm(x, modulus); }

  static std::int64_t norm(std::int64_t x, std::uint32_t m) {
    if (m == 0) return x;
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return r;
  }
  Fp attached(std::uint32_t m) const { return (p == m) ? *this : Fp(m, v); }
  static std::uint32_t join_mod(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw InvariantViolation("Fp: modulus mismatch");
    return a.p ? a.p : b.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t m = join_mod(a, b);
    return m ? Fp(m, a.attached(m).v + b.attached(m).v) : Fp(a.v + b.v);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t m = join_mod(a, b);
    return m ? Fp(m, a.attached(m).v - b.attached(m).v) : Fp(a.v - b.v);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t m = join_mod(a, b);
    if (!m) return Fp(a.v * b.v);
    return Fp(m, (static_cast<__int128>(a.attached(m).v) * b.attached(m).v) % m);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p ? Fp(p, -v) : Fp(-v); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t m = join_mod(a, b);
    if (!m) return a.v == b.v;
    return a.attached(m).v == b.attached(m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  bool is_zero() const { return p ? v == 0 : v == 0; }
  Fp inverse() const {
    if (p == 0) {
      if (v == 1 || v == -1) return *this;
      throw InvariantViolation("Fp: inverse of unattached non-unit");
    }
    if (v == 0) throw InvariantViolation("Fp: inverse of zero");
    // extended Euclid
    std::int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    return Fp(p, x0);
  }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v; }
  std::string str() const { return std::to_string(v); }
};

// Field contexts: carry whatever a field scalar needs to be materialized.
struct QCtx {};
struct FpCtx {
  std::uint32_t p;
};

template <typename F>
struct FieldOps;

template <>
struct FieldOps<QQ> {
  using Ctx = QCtx;
  static QQ from_int(const ZZ& x, const Ctx&) { return QQ(x); }
  static QQ from_int(long long x, const Ctx&) { return QQ(x); }
};

template <>
struct FieldOps<Fp> {
  using Ctx = FpCtx;
  static Fp from_int(const ZZ& x, const Ctx& c) {
    return Fp(c.p, static_cast<long long>(x.v % c.p));
  }
  static Fp from_int(long long x, const Ctx& c) { return Fp(c.p, x); }
};

// Runtime coefficient selector used throughout the CLI-facing layer.
struct Coefficients {
  enum Kind { integers, rationals, prime_field };
  Kind kind = integers;
  std::uint32_t p = 0;

  static Coefficients Z() { return {integers, 0}; }
  static Coefficients Q() { return {rationals, 0}; }
  static Coefficients F(std::uint32_t p) {
    if (p < 2) throw InputError("prime field needs p >= 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InputError("field order must be prime: " + std::to_string(p));
    return {prime_field, p};
  }
  bool is_field() const { return kind != integers; }
  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  std::string str() const {
    switch (kind) {
      case integers: return "Z";
      case rationals: return "Q";
      default: return "F" + std::to_string(p);
    }
  }
};

}  // namespace polyprod

namespace Eigen {

template <>
struct NumTraits<polyprod::ZZ> {
  using Real = polyprod::ZZ;
  using NonInteger = polyprod::ZZ;
  using Nested = polyprod::ZZ;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 10,
    MulCost = 20
  };
  static inline polyprod::ZZ epsilon() { return polyprod::ZZ(0); }
  static inline polyprod::ZZ dummy_precision() { return polyprod::ZZ(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<polyprod::QQ> {
  using Real = polyprod::QQ;
  using NonInteger = polyprod::QQ;
  using Nested = polyprod::QQ;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
  static inline polyprod::QQ epsilon() { return polyprod::QQ(0); }
  static inline polyprod::QQ dummy_precision() { return polyprod::QQ(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<polyprod::Fp> {
  using Real = polyprod::Fp;
  using NonInteger = polyprod::Fp;
  using Nested = polyprod::Fp;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline polyprod::Fp epsilon() { return polyprod::Fp(0); }
  static inline polyprod::Fp dummy_precision() { return polyprod::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
