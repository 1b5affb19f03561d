#pragma once

// Definitional brute force over finite rings M_k(Z/n). Every notion is
// evaluated literally by enumeration: comm(a), comm^2(a), units, and
// quasinilpotence as "1 + a y is a unit for every y in comm(a)". Nothing
// here calls the constructive library routes.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghinv/matrix.hpp"

namespace ghinv::oracle {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// M_dim(Z/modulus), elements numbered 0 .. size()-1 in base-`modulus`
// row-major digit order. Memoizes commutants, units and quasinilpotence
// lazily, so one instance must not be shared across threads.
class FiniteMatrixRing {
 public:
  using Index = std::uint32_t;

  FiniteMatrixRing(std::int64_t modulus, std::size_t dim,
                   std::size_t budget = kDefaultBudget);

  std::int64_t modulus() const { return modulus_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }
  std::size_t budget() const { return budget_; }
  // "Z/30" or "M2(Z/3)".
  std::string name() const;

  SquareMatrix element(Index x) const;
  Index index_of(const SquareMatrix& m) const;

  Index zero() const { return 0; }
  Index one() const { return one_; }
  Index add(Index x, Index y) const;
  Index sub(Index x, Index y) const;
  Index mul(Index x, Index y) const;

  bool commute(Index x, Index y) const { return mul(x, y) == mul(y, x); }
  bool is_idempotent(Index x) const { return mul(x, x) == x; }

  const std::vector<Index>& comm(Index a) const;
  std::vector<Index> comm2(Index a) const;
  bool is_unit(Index x) const;
  bool is_qnil(Index x) const;

  // All b in comm^2(a) with bab = b and a^2 - ab quasinilpotent. Throws
  // kInternal if more than one exists.
  std::optional<Index> brute_force_hirano(Index a) const;
  // As above with a - a^2 b quasinilpotent.
  std::optional<Index> brute_force_drazin(Index a) const;
  // Idempotents p in comm^2(a) with a^2 - p quasinilpotent.
  std::vector<Index> spectral_idempotents(Index a) const;

 private:
  std::vector<std::int64_t> decode(Index x) const;
  Index encode(const std::vector<std::int64_t>& digits) const;

  std::int64_t modulus_;
  std::size_t dim_;
  std::size_t size_;
  std::size_t budget_;
  Index one_;

  mutable std::map<Index, std::vector<Index>> comm_cache_;
  mutable std::vector<signed char> unit_cache_;
  mutable std::vector<signed char> qnil_cache_;
  mutable std::map<Index, std::optional<Index>> hirano_cache_;
};

// Parses "Zn:30", "M2(Zn:3)" or a bare modulus "30".
FiniteMatrixRing parse_finite_ring(std::string_view spec,
                                   std::size_t budget = kDefaultBudget);

struct PropertyReport {
  std::string property;
  std::string ring;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample && checked == passed; }
};

struct PropertyEntry {
  std::string description;
  // Number of ring elements enumerated jointly (1, 2 or 3); the budget
  // bounds size()^arity.
  int arity;
  std::function<PropertyReport(const FiniteMatrixRing&)> run;
};

const std::map<std::string, PropertyEntry>& property_registry();

// Throws kPrecondition for an unknown id and kBudget when the enumeration
// exceeds the ring's budget.
PropertyReport exhaustive_check(std::string_view property_id,
                                const FiniteMatrixRing& ring);

}  // namespace ghinv::oracle
