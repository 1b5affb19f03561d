#pragma once

#include <string>
#include <vector>

#include "ghinv/rings.hpp"

namespace ghinv {

// Univariate polynomial over a base ring, coefficients lowest degree first.
// The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  explicit Polynomial(const RingDescriptor& ring) : ring_(ring) {}
  Polynomial(const RingDescriptor& ring, std::vector<RingElement> coefficients);

  static Polynomial constant(const RingElement& c);
  // t - root
  static Polynomial linear_factor(const RingElement& root);
  static Polynomial monomial(const RingDescriptor& ring, std::size_t degree);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RingElement coefficient(std::size_t i) const;
  const RingElement& leading() const;

  RingElement evaluate(const RingElement& x) const;

  // "t^2 - 29*t + 4"
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  RingDescriptor ring_;
  std::vector<RingElement> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

// Long division; the divisor's leading coefficient must be a unit.
PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor);

struct ExtendedGcd {
  Polynomial gcd;  // monic, or zero when both inputs are zero
  Polynomial s;
  Polynomial t;    // s*a + t*b = gcd
};

// Field coefficients only.
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ghinv
