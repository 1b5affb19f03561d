#include "ghinv/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace ghinv {

Polynomial::Polynomial(const RingDescriptor& ring,
                       std::vector<RingElement> coefficients)
    : ring_(ring), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.ring() == ring_)) {
      throw Error(ErrorCode::kDescriptorMismatch,
                  "polynomial coefficient from " + c.ring().name());
    }
  }
  trim();
}

Polynomial Polynomial::constant(const RingElement& c) {
  return Polynomial(c.ring(), {c});
}

Polynomial Polynomial::linear_factor(const RingElement& root) {
  return Polynomial(root.ring(), {-root, RingElement::one(root.ring())});
}

Polynomial Polynomial::monomial(const RingDescriptor& ring, std::size_t degree) {
  std::vector<RingElement> c(degree + 1, RingElement::zero(ring));
  c.back() = RingElement::one(ring);
  return Polynomial(ring, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(ring_);
}

const RingElement& Polynomial::leading() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kPrecondition, "zero polynomial has no leading term");
  }
  return coeffs_.back();
}

RingElement Polynomial::evaluate(const RingElement& x) const {
  RingElement acc = RingElement::zero(ring_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const RingElement& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool negative = !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_coeff = cs == "1";
    if (i == 0 || !unit_coeff) out += cs;
    if (i > 0) {
      if (!unit_coeff) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<RingElement> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coefficient(i) + b.coefficient(i));
  return Polynomial(a.ring_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<RingElement> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coefficient(i) - b.coefficient(i));
  return Polynomial(a.ring_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) {
    throw Error(ErrorCode::kDescriptorMismatch, "polynomial ring mismatch");
  }
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<RingElement> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                             RingElement::zero(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.ring_, std::move(c));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(RingElement::one(p.ring()));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::kPrecondition, "polynomial division by zero");
  }
  auto lead_inv = try_invert(divisor.leading());
  if (!lead_inv) {
    throw Error(ErrorCode::kPrecondition,
                "divisor leading coefficient is not a unit");
  }
  const RingDescriptor& ring = dividend.ring();
  std::vector<RingElement> rem = dividend.coefficients();
  const auto& dc = divisor.coefficients();
  const std::size_t dd = dc.size() - 1;
  if (rem.size() < dc.size()) {
    return {Polynomial(ring), dividend};
  }
  std::vector<RingElement> quot(rem.size() - dd, RingElement::zero(ring));
  for (std::size_t k = rem.size(); k-- > dd;) {
    const RingElement q = rem[k] * *lead_inv;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * dc[j];
  }
  return {Polynomial(ring, std::move(quot)), Polynomial(ring, std::move(rem))};
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const RingDescriptor& ring = a.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupported,
                "polynomial gcd needs a field, got " + ring.name());
  }
  const Polynomial one = Polynomial::constant(RingElement::one(ring));
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = one, s1(ring);
  Polynomial t0(ring), t1 = one;
  while (!r1.is_zero()) {
    auto [q, r] = divide(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Polynomial scale = Polynomial::constant(*try_invert(r0.leading()));
  return {r0 * scale, s0 * scale, t0 * scale};
}

}  // namespace ghinv
