#include "octorb/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <vector>

namespace octorb {

bool isPrime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 3 || p >= (1u << 16) || !isPrime(p))
    throw FieldMismatch("F_p requires an odd prime p with 3 <= p < 2^16, got p=" + std::to_string(p));
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = p;
  return f;
}

std::string FieldSpec::str() const {
  return isPrimeField() ? "F_" + std::to_string(p) : "Q";
}

namespace {

std::uint32_t mulMod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((a * b) % p);
}

std::uint32_t powMod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = (acc * base) % p;
    base = (base * base) % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t invMod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
  return powMod(a, p - 2, p);
}

// Reduces a rational into F_p via the canonical partial homomorphism.
std::uint32_t reduceRational(const Rational& q, std::uint32_t p) {
  BigInt num = numerator(q) % p;
  if (num < 0) num += p;
  BigInt den = denominator(q) % p;  // > 0 by cpp_rational invariant
  auto n = static_cast<std::uint32_t>(num);
  auto d = static_cast<std::uint32_t>(den);
  if (d == 0)
    throw DivisionByZero("rational " + q.str() + " has no image in F_" + std::to_string(p) +
                         " (denominator divisible by p)");
  return d == 1 ? n : mulMod(n, invMod(d, p), p);
}

}  // namespace

class ScalarOps {
 public:
  using Res = Scalar::Res;

  static Scalar wrap(Rational r) {
    Scalar s;
    s.v_ = std::move(r);
    return s;
  }
  static Scalar wrap(Res r) {
    Scalar s;
    s.v_ = r;
    return s;
  }

  // Resolves the common field of two operands: both rational stays rational,
  // anything else lands in the (unique) prime field involved.
  static std::optional<std::pair<Res, Res>> lift(const Scalar& a, const Scalar& b) {
    const Res* ra = std::get_if<Res>(&a.v_);
    const Res* rb = std::get_if<Res>(&b.v_);
    if (!ra && !rb) return std::nullopt;
    if (ra && rb && ra->p != rb->p)
      throw FieldMismatch("mixing F_" + std::to_string(ra->p) + " with F_" + std::to_string(rb->p));
    std::uint32_t p = ra ? ra->p : rb->p;
    Res xa = ra ? *ra : Res{reduceRational(std::get<Rational>(a.v_), p), p};
    Res xb = rb ? *rb : Res{reduceRational(std::get<Rational>(b.v_), p), p};
    return std::make_pair(xa, xb);
  }
};

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return ScalarOps::wrap(Rational(BigInt(num), BigInt(den)));
}

Scalar Scalar::residue(std::uint64_t r, std::uint32_t p) {
  return ScalarOps::wrap(Res{static_cast<std::uint32_t>(r % p), p});
}

Scalar Scalar::of(const FieldSpec& field, long long n) {
  if (!field.isPrimeField()) return Scalar(n);
  long long m = n % static_cast<long long>(field.p);
  if (m < 0) m += field.p;
  return residue(static_cast<std::uint64_t>(m), field.p);
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar text");
  try {
    if (field.isPrimeField()) {
      if (text.find('/') != std::string::npos) {
        // allow "n/d" over F_p too; it reduces through the canonical hom
        Rational q(text);
        return residue(reduceRational(q, field.p), field.p);
      }
      BigInt n(text);
      BigInt m = n % field.p;
      if (m < 0) m += field.p;
      return residue(static_cast<std::uint64_t>(m), field.p);
    }
    Rational q(text);
    return ScalarOps::wrap(std::move(q));
  } catch (const DivisionByZero&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad scalar text '" + text + "' for field " + field.str());
  }
}

bool Scalar::isZero() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  return std::get<Res>(v_).r == 0;
}

bool Scalar::isOne() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r == 1;
  return std::get<Res>(v_).r == 1;
}

FieldSpec Scalar::field() const {
  if (isRational()) return FieldSpec::rationals();
  return FieldSpec::prime(std::get<Res>(v_).p);
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->str();
  return std::to_string(std::get<Res>(v_).r);
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return ScalarOps::wrap(Rational(-*r));
  auto f = std::get<Res>(v_);
  return ScalarOps::wrap(Res{f.r == 0 ? 0 : f.p - f.r, f.p});
}

Scalar Scalar::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<Rational>(&v_)) return ScalarOps::wrap(Rational(1 / *r));
  auto f = std::get<Res>(v_);
  return ScalarOps::wrap(Res{invMod(f.r, f.p), f.p});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (auto lifted = ScalarOps::lift(a, b)) {
    auto [x, y] = *lifted;
    return Scalar::residue(std::uint64_t(x.r) + y.r, x.p);
  }
  return ScalarOps::wrap(Rational(a.rat() + b.rat()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (auto lifted = ScalarOps::lift(a, b)) {
    auto [x, y] = *lifted;
    return Scalar::residue(std::uint64_t(x.r) + x.p - y.r, x.p);
  }
  return ScalarOps::wrap(Rational(a.rat() - b.rat()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (auto lifted = ScalarOps::lift(a, b)) {
    auto [x, y] = *lifted;
    return Scalar::residue(std::uint64_t(x.r) * y.r, x.p);
  }
  return ScalarOps::wrap(Rational(a.rat() * b.rat()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.isZero()) throw DivisionByZero("division by zero");
  if (auto lifted = ScalarOps::lift(a, b)) {
    auto [x, y] = *lifted;
    return Scalar::residue(std::uint64_t(x.r) * invMod(y.r, x.p), x.p);
  }
  return ScalarOps::wrap(Rational(a.rat() / b.rat()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.isRational() && b.isRational()) return a.rat() == b.rat();
  auto lifted = ScalarOps::lift(a, b);
  auto [x, y] = *lifted;
  return x.r == y.r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.isRational() && b.isRational()) return a.rat() < b.rat();
  auto lifted = ScalarOps::lift(a, b);
  auto [x, y] = *lifted;
  return x.r < y.r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

// Smallest square root per residue, computed once per prime. p < 2^16 keeps
// the tables tiny.
const std::vector<std::uint32_t>& sqrtTable(std::uint32_t p) {
  static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  // Each nonzero square has roots {r, p-r} with exactly one representative
  // <= p/2, so scanning that range records the smaller root directly.
  std::vector<std::uint32_t> table(p, p);  // p marks "no root"
  for (std::uint32_t r = 0; r <= p / 2; ++r) table[mulMod(r, r, p)] = r;
  return cache.emplace(p, std::move(table)).first->second;
}

std::optional<BigInt> intSqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Scalar> sqrt(const Scalar& a) {
  if (a.isRational()) {
    const Rational& q = a.rat();
    auto rn = intSqrt(numerator(q));
    auto rd = intSqrt(denominator(q));
    if (!rn || !rd) return std::nullopt;
    return Scalar(Rational(*rn, *rd));
  }
  std::uint32_t p = a.residuePrime();
  std::uint32_t root = sqrtTable(p)[a.residueValue()];
  if (root == p) return std::nullopt;
  return Scalar::residue(root, p);
}

}  // namespace octorb
