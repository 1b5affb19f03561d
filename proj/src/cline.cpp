#include "ghinv/cline.hpp"

namespace ghinv {

std::optional<HiranoWitness> cline_generalized(const SquareMatrix& a,
                                               const SquareMatrix& b,
                                               const SquareMatrix& c) {
  if (!(a * b * a == a * c * a)) {
    throw Error(ErrorCode::kPrecondition, "Cline transfer needs aba = aca");
  }
  const SquareMatrix ba = b * a;
  auto d = hirano(a * c);
  if (!d) {
    if (hirano(ba)) {
      throw Error(ErrorCode::kInternal,
                  "ba has a Hirano inverse although ac has none");
    }
    return std::nullopt;
  }
  return make_witness(ba, b * square(d->h) * a, "cline");
}

std::optional<HiranoWitness> cline_classic(const SquareMatrix& a, const SquareMatrix& b) {
  return cline_generalized(a, b, b);
}

std::optional<HiranoWitness> product_commuting(const SquareMatrix& a,
                                               const SquareMatrix& b) {
  const SquareMatrix ab = a * b;
  if (!(ab == b * a)) {
    throw Error(ErrorCode::kPrecondition, "product rule needs ab = ba");
  }
  auto ha = hirano(a);
  if (!ha) return std::nullopt;
  auto hb = hirano(b);
  if (!hb) return std::nullopt;
  return make_witness(ab, ha->h * hb->h, "product");
}

std::optional<HiranoWitness> power_formula(const SquareMatrix& a, int n) {
  if (n < 1) {
    throw Error(ErrorCode::kPrecondition, "power rule needs n >= 1");
  }
  auto ha = hirano(a);
  if (!ha) return std::nullopt;
  const auto e = static_cast<unsigned>(n);
  return make_witness(pow(a, e), pow(ha->h, e), "power");
}

}  // namespace ghinv
