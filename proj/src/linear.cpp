#include "ghinv/linear.hpp"

#include <numeric>
#include <utility>

namespace ghinv {

std::vector<std::size_t> row_reduce(Rows& rows, std::size_t cols,
                                    const RingDescriptor& ring) {
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupported, "row_reduce needs a field, got " + ring.name());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const RingElement inv = *try_invert(rows[r][c]);
    for (auto& e : rows[r]) e = e * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const RingElement f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vector> nullspace_field(Rows m, std::size_t cols,
                                    const RingDescriptor& ring) {
  const auto pivots = row_reduce(m, cols, ring);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, RingElement::zero(ring));
    v[free] = RingElement::one(ring);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

using Residue = std::int64_t;
using ResidueRow = std::vector<Residue>;

Residue mulmod(Residue a, Residue b, Residue n) {
  return static_cast<Residue>(static_cast<__int128>(a) * b % n);
}

Residue reduce(Residue a, Residue n) {
  a %= n;
  return a < 0 ? a + n : a;
}

struct Bezout {
  Residue g, s, t;  // s*a + t*b = g
};

Bezout xgcd(Residue a, Residue b) {
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// Unit w with w * a = gcd(a, n) mod n.
Residue normalizing_unit(Residue a, Residue n) {
  const Residue g = std::gcd(a, n);
  const Residue ng = n / g;
  Residue w = reduce(xgcd(a / g, ng).s, ng);
  while (std::gcd(w, n) != 1) w += ng;
  return w;
}

bool is_zero_row(const ResidueRow& row) {
  for (auto v : row) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> howell_form(
    std::vector<std::vector<std::int64_t>> rows, std::size_t cols,
    std::int64_t n) {
  for (auto& row : rows) {
    for (auto& v : row) v = reduce(v, n);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    // Gather column c into row r with unimodular 2x2 transforms.
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Residue a = rows[r][c], b = rows[i][c];
      const auto [g, s, t] = xgcd(a, b);
      const Residue u = b / g, v = a / g;
      for (std::size_t j = c; j < cols; ++j) {
        const Residue x = rows[r][j], y = rows[i][j];
        rows[r][j] = reduce(mulmod(reduce(s, n), x, n) + mulmod(reduce(t, n), y, n), n);
        rows[i][j] = reduce(mulmod(v, y, n) - mulmod(u, x, n), n);
      }
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;

    const Residue w = normalizing_unit(rows[r][c], n);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = mulmod(w, rows[r][j], n);
    const Residue pivot = rows[r][c];  // divides n

    for (std::size_t i = 0; i < r; ++i) {
      const Residue q = rows[i][c] / pivot;
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = reduce(rows[i][j] - mulmod(q, rows[r][j], n), n);
      }
    }

    // The annihilator multiple of the pivot row vanishes in column c; it
    // must still be represented by the rows below.
    ResidueRow ann(cols, 0);
    const Residue k = n / pivot;
    for (std::size_t j = c; j < cols; ++j) ann[j] = mulmod(k, rows[r][j], n);
    if (!is_zero_row(ann)) rows.push_back(std::move(ann));
    ++r;
  }
  rows.resize(std::min(r, rows.size()));
  std::erase_if(rows, is_zero_row);
  return rows;
}

std::vector<Vector> nullspace_mod(const Rows& m, std::size_t cols,
                                  const RingDescriptor& ring) {
  if (ring.kind() != RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported, "nullspace_mod needs Z/nZ");
  }
  const std::int64_t n = ring.modulus();
  // Row j of [M^T | I]: combinations y give (M y, y). Rows of the Howell
  // form that vanish on the first block generate every such vector with
  // M y = 0.
  const std::size_t eqs = m.size();
  std::vector<ResidueRow> aug(cols, ResidueRow(eqs + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < eqs; ++i) {
      aug[j][i] = static_cast<Residue>(m[i][j].numerator());
    }
    aug[j][eqs + j] = 1;
  }
  const auto h = howell_form(std::move(aug), eqs + cols, n);
  std::vector<Vector> gens;
  for (const auto& row : h) {
    bool head_zero = true;
    for (std::size_t i = 0; i < eqs && head_zero; ++i) head_zero = row[i] == 0;
    if (!head_zero) continue;
    Vector v;
    v.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) v.emplace_back(ring, row[eqs + j]);
    gens.push_back(std::move(v));
  }
  return gens;
}

}  // namespace ghinv
