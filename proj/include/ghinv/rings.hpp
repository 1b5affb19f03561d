#pragma once

// Exact arithmetic over the supported commutative base rings:
//   Q             rationals
//   Z             integers
//   Z/nZ          residues modulo n >= 2
//   Z_(p)         rationals whose reduced denominator is prime to p
//
// Every element carries its descriptor and is kept in canonical form
// (lowest terms with positive denominator, or a residue in [0, n)), so
// equality is structural.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghinv/error.hpp"

namespace ghinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class RingKind { kRationals, kIntegers, kIntegersMod, kPLocal };

class RingDescriptor {
 public:
  static RingDescriptor rationals() { return {RingKind::kRationals, 0}; }
  static RingDescriptor integers() { return {RingKind::kIntegers, 0}; }
  static RingDescriptor integers_mod(std::int64_t n);
  static RingDescriptor p_local(std::int64_t p);

  RingKind kind() const { return kind_; }
  // n for Z/nZ, p for Z_(p), 0 otherwise.
  std::int64_t modulus() const { return modulus_; }

  bool is_field() const;
  // Q, Z_(p), and Z/p^e.
  bool is_local() const;
  bool has_finite_quotient() const {
    return kind_ == RingKind::kIntegersMod || kind_ == RingKind::kPLocal;
  }

  // Human-readable name: "Q", "Z", "Z/26", "Z_(2)".
  std::string name() const;

  bool operator==(const RingDescriptor&) const = default;

 private:
  RingDescriptor(RingKind kind, std::int64_t modulus)
      : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::int64_t modulus_;
};

class RingElement {
 public:
  RingElement(const RingDescriptor& ring, std::int64_t value);
  RingElement(const RingDescriptor& ring, const BigInt& value);

  // num/den interpreted in `ring`. Throws kPrecondition when the fraction
  // has no image there (den = 0, non-integral over Z, den divisible by p
  // over Z_(p), den not a unit mod n).
  static RingElement from_fraction(const RingDescriptor& ring, const BigInt& num,
                                   const BigInt& den);
  static RingElement from_rational(const RingDescriptor& ring,
                                   const BigRational& value);
  // Accepts "a", "-a", "a/b".
  static RingElement parse(const RingDescriptor& ring, std::string_view text);

  static RingElement zero(const RingDescriptor& ring) { return {ring, 0}; }
  static RingElement one(const RingDescriptor& ring) { return {ring, 1}; }

  const RingDescriptor& ring() const { return ring_; }
  const BigRational& value() const { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  std::string to_string() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement lhs, const RingElement& rhs) {
    return lhs += rhs;
  }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) {
    return lhs -= rhs;
  }
  friend RingElement operator*(RingElement lhs, const RingElement& rhs) {
    return lhs *= rhs;
  }
  friend RingElement operator-(const RingElement& x);

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  RingElement(const RingDescriptor& ring, BigRational value, bool /*canonical*/)
      : ring_(ring), value_(std::move(value)) {}

  void canonicalize();
  void require_same_ring(const RingElement& other) const;

  RingDescriptor ring_;
  BigRational value_;
};

std::optional<RingElement> try_invert(const RingElement& x);
bool is_unit(const RingElement& x);

bool in_jacobson_radical(const RingElement& x);
// 1 + xy is a unit for all y; in a commutative ring this is J(R) membership.
bool is_quasinilpotent_scalar(const RingElement& x);

// Image of x under the canonical map into `target` (Z -> Q, Z_(p) -> Z/p^e,
// Z/n -> Z/m for m | n, Q -> Z when integral, ...). Throws kPrecondition when
// x has no image.
RingElement change_ring(const RingElement& x, const RingDescriptor& target);

bool is_prime(std::int64_t n);
// Squarefree kernel: product of the distinct primes dividing n.
std::int64_t radical(std::int64_t n);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

std::vector<PrimePower> crt_split(std::int64_t n);
// Z/n -> prod Z/p^e, in crt_split order.
std::vector<RingElement> crt_project(const RingElement& x);
RingElement crt_reconstruct(std::span<const RingElement> parts,
                            const RingDescriptor& target);

// Non-negative r with r^2 = q when q is the square of a rational.
std::optional<RingElement> rational_square_root(const RingElement& q);

struct QuadraticRoots {
  RingElement x1;
  RingElement x2;
};

// Roots of x^2 - t x + d = 0 in the ring of t and d. When d is in J and t is
// in 1 + J the result is ordered so that x1 is in J and x2 in 1 + J.
std::optional<QuadraticRoots> quadratic_roots_in_ring(const RingElement& t,
                                                      const RingElement& d);

}  // namespace ghinv
