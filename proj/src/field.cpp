#include "coreflect/field.hpp"

#include "coreflect/error.hpp"

namespace coreflect {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverseMod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error("inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, newT = 1;
  std::int64_t r = p, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !isPrime(p))
    throw Error("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  Field f;
  f.kind_ = Kind::PrimeField;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string Field::name() const {
  return isRationals() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::fromInt(const Field& f, long long v) {
  Scalar s(f);
  if (f.isRationals()) {
    s.q_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    long long m = v % static_cast<long long>(f.characteristic());
    if (m < 0) m += f.characteristic();
    s.r_ = static_cast<std::uint32_t>(m);
  }
  return s;
}

Scalar Scalar::fromResidue(const Field& f, std::uint32_t r) {
  Scalar s(f);
  if (f.isRationals()) {
    s.q_ = r;
  } else {
    s.r_ = r % f.characteristic();
  }
  return s;
}

Scalar Scalar::fromRational(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.isRationals()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  const unsigned long p = f.characteristic();
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error("denominator vanishes in " + f.name());
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * inverseMod(d, f.characteristic()) %
                                    f.characteristic());
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw ParseError("empty scalar");
  auto validInt = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!validInt(num) || !validInt(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed scalar '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return fromRational(f, q);
}

bool Scalar::isZero() const {
  return field_.isRationals() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::isOne() const {
  return field_.isRationals() ? q_ == 1 : r_ == 1;
}

void Scalar::requireSameField(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.isRationals())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  requireSameField(o);
  if (field_.isRationals())
    q_ += o.q_;
  else
    r_ = detail::FpOps{field_.characteristic()}.add(r_, o.r_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  requireSameField(o);
  if (field_.isRationals())
    q_ -= o.q_;
  else
    r_ = detail::FpOps{field_.characteristic()}.sub(r_, o.r_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  requireSameField(o);
  if (field_.isRationals())
    q_ *= o.q_;
  else
    r_ = detail::FpOps{field_.characteristic()}.mul(r_, o.r_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error("division by zero");
  Scalar s(field_);
  if (field_.isRationals())
    s.q_ = 1 / q_;
  else
    s.r_ = inverseMod(r_, field_.characteristic());
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  requireSameField(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.isRationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
  if (!field_.isRationals()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace coreflect
