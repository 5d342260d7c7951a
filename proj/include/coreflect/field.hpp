#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace coreflect {

/// The base field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws Error unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool isRationals() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; residues are reduced into [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return fromInt(f, 1); }
  static Scalar fromInt(const Field& f, long long v);
  /// Throws Error when the denominator vanishes in F_p.
  static Scalar fromRational(const Field& f, const mpq_class& q);
  /// Parses "n", "-n" or "a/b".
  static Scalar parse(const Field& f, const std::string& text);
  static Scalar fromResidue(const Field& f, std::uint32_t r);

  const Field& field() const noexcept { return field_; }
  bool isZero() const;
  bool isOne() const;

  const mpq_class& rational() const noexcept { return q_; }
  std::uint32_t residue() const noexcept { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: integers as "n", other rationals as "a/b", residues as "r".
  std::string str() const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void requireSameField(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

std::uint32_t inverseMod(std::uint32_t a, std::uint32_t p);
bool isPrime(std::uint64_t n);

namespace detail {

struct QOps {
  using T = mpq_class;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool isZero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  // acc -= a*b, the elimination kernel.
  void subMul(T& acc, const T& a, const T& b) const { acc -= a * b; }
  void addMul(T& acc, const T& a, const T& b) const { acc += a * b; }
  T fromScalar(const Scalar& s) const { return s.rational(); }
  Scalar toScalar(const Field& f, const T& a) const { return Scalar::fromRational(f, a); }
};

struct FpOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool isZero(T a) const { return a == 0; }
  T add(T a, T b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const {
    return static_cast<T>(static_cast<std::uint64_t>(a) * b % p);
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const { return inverseMod(a, p); }
  void subMul(T& acc, T a, T b) const { acc = sub(acc, mul(a, b)); }
  void addMul(T& acc, T a, T b) const { acc = add(acc, mul(a, b)); }
  T fromScalar(const Scalar& s) const { return s.residue(); }
  Scalar toScalar(const Field& f, T a) const { return Scalar::fromResidue(f, a); }
};

}  // namespace detail
}  // namespace coreflect
