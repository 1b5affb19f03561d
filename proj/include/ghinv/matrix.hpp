#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghinv/polynomial.hpp"
#include "ghinv/rings.hpp"

namespace ghinv {

// Dense k x k matrix over a base ring, row-major. All entries share the
// matrix's descriptor.
class SquareMatrix {
 public:
  // Zero matrix.
  SquareMatrix(const RingDescriptor& ring, std::size_t dim);
  SquareMatrix(const RingDescriptor& ring, std::size_t dim,
               std::vector<RingElement> entries);

  static SquareMatrix identity(const RingDescriptor& ring, std::size_t dim);
  static SquareMatrix diagonal(const RingDescriptor& ring,
                               const std::vector<RingElement>& diag);
  static SquareMatrix diagonal(const RingDescriptor& ring,
                               std::initializer_list<std::int64_t> diag);
  static SquareMatrix from_rows(
      const RingDescriptor& ring,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static SquareMatrix from_rows(const RingDescriptor& ring,
                                const std::vector<std::vector<RingElement>>& rows);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const RingElement& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  void set(std::size_t i, std::size_t j, const RingElement& value);
  std::span<const RingElement> entries() const { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator-=(const SquareMatrix& other);

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(const SquareMatrix& a);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const RingElement& s, const SquareMatrix& a);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void require_conforming(const SquareMatrix& other) const;

  RingDescriptor ring_;
  std::size_t dim_;
  std::vector<RingElement> entries_;
};

SquareMatrix pow(const SquareMatrix& a, unsigned exponent);
inline SquareMatrix square(const SquareMatrix& a) { return a * a; }

RingElement trace(const SquareMatrix& a);
// Berkowitz recurrence: division-free, valid over every supported ring.
Polynomial char_poly(const SquareMatrix& a);
RingElement det(const SquareMatrix& a);
SquareMatrix adjugate(const SquareMatrix& a);
std::optional<SquareMatrix> try_invert_matrix(const SquareMatrix& a);

// Horner evaluation of f at a.
SquareMatrix evaluate(const Polynomial& f, const SquareMatrix& a);

bool commutes(const SquareMatrix& a, const SquareMatrix& b);
bool is_idempotent(const SquareMatrix& a);

bool is_nilpotent(const SquareMatrix& a);
std::optional<std::size_t> nilpotency_index(const SquareMatrix& a);

// Over Q and Z: nilpotent. Over Z/nZ and Z_(p): nilpotent modulo J(R),
// i.e. a^k has every entry in J(R).
bool is_quasinilpotent_matrix(const SquareMatrix& a);
// Every entry lies in J(R).
bool in_radical_matrix(const SquareMatrix& a);

SquareMatrix change_ring(const SquareMatrix& a, const RingDescriptor& target);
std::vector<SquareMatrix> crt_project(const SquareMatrix& a);
SquareMatrix crt_reconstruct(std::span<const SquareMatrix> parts,
                             const RingDescriptor& target);

// Peirce decomposition of x relative to an idempotent p.
struct BlockView {
  SquareMatrix p;
  SquareMatrix top_left;      // p x p
  SquareMatrix top_right;     // p x (1-p)
  SquareMatrix bottom_left;   // (1-p) x p
  SquareMatrix bottom_right;  // (1-p) x (1-p)
};

BlockView peirce_blocks(const SquareMatrix& x, const SquareMatrix& p);
SquareMatrix block_recompose(const BlockView& view);

}  // namespace ghinv
