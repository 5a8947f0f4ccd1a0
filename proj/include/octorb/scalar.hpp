#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "octorb/errors.hpp"

namespace octorb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// The base field: the rationals, or a prime field F_p with p an odd prime.
/// Characteristic 2 is excluded throughout.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // set iff kind == PrimeField

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);  // validates: odd prime, p < 2^16

  bool isPrimeField() const { return kind == Kind::PrimeField; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool isPrime(std::uint32_t n);

/// An exact field element: a reduced arbitrary-precision rational, or a
/// residue in [0, p). Arithmetic never rounds.
///
/// Integer-valued rationals (and rationals whose denominator is invertible
/// mod p) coerce into F_p when combined with residues, so literals like
/// Scalar(1) work in every field. Residues from distinct primes never mix.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}

  static Scalar rational(long long num, long long den);
  static Scalar residue(std::uint64_t r, std::uint32_t p);

  /// n as an element of the given field.
  static Scalar of(const FieldSpec& field, long long n);
  /// Parses the text encoding: "n" or "n/d" over Q, a decimal residue over F_p.
  static Scalar parse(const FieldSpec& field, const std::string& text);

  bool isRational() const { return std::holds_alternative<Rational>(v_); }
  bool isZero() const;
  bool isOne() const;

  /// The field this value currently lives in (integer literals count as Q).
  FieldSpec field() const;

  const Rational& rat() const { return std::get<Rational>(v_); }
  std::uint32_t residueValue() const { return std::get<Res>(v_).r; }
  std::uint32_t residuePrime() const { return std::get<Res>(v_).p; }

  /// Canonical text form: "n" / "n/d" with d > 0 reduced, or the residue.
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero on 0

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Strict ordering used only for canonical (deterministic) output orders.
  friend bool operator<(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  struct Res {
    std::uint32_t r, p;
  };
  std::variant<Rational, Res> v_;

  friend class ScalarOps;
};

/// Square root. In F_p: the smaller of the two root representatives, or
/// nullopt for a non-residue. Over Q: defined for perfect squares only.
std::optional<Scalar> sqrt(const Scalar& a);

}  // namespace octorb
