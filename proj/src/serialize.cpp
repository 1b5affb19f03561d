#include "ghinv/serialize.hpp"

namespace ghinv {

using nlohmann::json;

json to_json(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::kRationals:
      return {{"kind", "Q"}};
    case RingKind::kIntegers:
      return {{"kind", "Z"}};
    case RingKind::kIntegersMod:
      return {{"kind", "Zn"}, {"n", ring.modulus()}};
    case RingKind::kPLocal:
      return {{"kind", "Zp_local"}, {"p", ring.modulus()}};
  }
  throw Error(ErrorCode::kInternal, "unknown ring kind");
}

RingDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::kParse, "ring descriptor needs a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  auto param = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw Error(ErrorCode::kParse,
                  "ring kind " + kind + " needs integer \"" + key + "\"");
    }
    return j[key].get<std::int64_t>();
  };
  if (kind == "Q") return RingDescriptor::rationals();
  if (kind == "Z") return RingDescriptor::integers();
  if (kind == "Zn") return RingDescriptor::integers_mod(param("n"));
  if (kind == "Zp_local") return RingDescriptor::p_local(param("p"));
  throw Error(ErrorCode::kParse, "unknown ring kind '" + kind + "'");
}

json to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

SquareMatrix matrix_from_json(const json& j, const RingDescriptor& ring) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::kParse, "matrix must be a non-empty array of rows");
  }
  const std::size_t k = j.size();
  std::vector<RingElement> entries;
  entries.reserve(k * k);
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::kParse, "matrix row is not an array");
    if (row.size() != k) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    }
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        entries.emplace_back(ring, e.get<std::int64_t>());
      } else if (e.is_string()) {
        entries.push_back(RingElement::parse(ring, e.get<std::string>()));
      } else {
        throw Error(ErrorCode::kParse, "matrix entry must be an integer or a string");
      }
    }
  }
  return SquareMatrix(ring, k, std::move(entries));
}

json to_json(const HiranoReport& r) {
  return {{"bab_eq_b", r.bab_eq_b},
          {"in_double_commutant", r.in_double_commutant},
          {"square_minus_ab_qnil", r.square_minus_ab_qnil},
          {"ab_eq_ba", r.ab_eq_ba},
          {"drazin_residual_qnil", r.drazin_residual_qnil},
          {"is_hirano", r.is_hirano()},
          {"is_drazin", r.is_drazin()}};
}

json to_json(const HiranoWitness& w) {
  return {{"exists", true},
          {"route", w.route},
          {"h", to_json(w.h)},
          {"p", to_json(w.p)},
          {"pi", to_json(w.pi)},
          {"checks", to_json(w.report)}};
}

json to_json(const Classification& c) {
  json j{{"case", std::string(to_string(c.kind))},
         {"det", c.det.to_string()},
         {"trace_of_square", c.trace_of_square.to_string()},
         {"conditions",
          {{"det_in_J", c.det_in_radical},
           {"trace_square_in_J", c.trace_square_in_radical},
           {"det_square_in_1+J", c.det_square_in_one_plus_radical},
           {"trace_square_in_2+J", c.trace_square_in_two_plus_radical},
           {"trace_square_in_1+J", c.trace_square_in_one_plus_radical}}}};
  if (c.roots) j["roots"] = {c.roots->x1.to_string(), c.roots->x2.to_string()};
  if (c.transform) j["transform"] = to_json(*c.transform);
  if (!c.failed.empty()) j["failed"] = c.failed;
  return j;
}

json to_json(const HiranoOutcome& o) {
  json j = o.witness ? to_json(*o.witness) : json{{"exists", false}, {"route", o.route}};
  if (o.classification) {
    j["case"] = std::string(to_string(o.classification->kind));
    j["classification"] = to_json(*o.classification);
  }
  if (!o.failed.empty()) j["failed"] = o.failed;
  return j;
}

json to_json(const SumHypotheses& h) {
  return {{"a_eq_a_bpi", h.a_eq_a_bpi},
          {"bpi_b_api_eq_bpi_b", h.bpi_b_api_eq_bpi_b},
          {"bpi_api_ba_eq_bpi_api_ab", h.bpi_api_ba_eq_bpi_api_ab},
          {"all", h.all()}};
}

json to_json(const AbsorbingHypotheses& h) {
  return {{"commute", h.commute},
          {"a_eq_a_bpi", h.a_eq_a_bpi},
          {"bpi_b_api_eq_bpi_b", h.bpi_b_api_eq_bpi_b},
          {"literal_bpi_eq_b_api", h.literal_bpi_eq_b_api},
          {"literal_b_api_eq_bpi_b", h.literal_b_api_eq_bpi_b},
          {"satisfied", h.satisfied()},
          {"literal_reading", h.literal_reading()}};
}

json to_json(const SeriesSum& s) {
  json j = to_json(s.witness);
  j["hypotheses"] = to_json(s.hypotheses);
  j["series_terms"] = s.terms;
  j["series_terminated"] = s.terminated;
  if (s.series_value) j["series_value"] = to_json(*s.series_value);
  if (s.literal_value && s.series_value) {
    j["literal_terms_match"] = *s.literal_value == *s.series_value;
  }
  j["flags"] = s.flags;
  return j;
}

json to_json(const oracle::PropertyReport& r) {
  json j{{"property", r.property},
         {"ring", r.ring},
         {"checked", r.checked},
         {"passed", r.passed},
         {"ok", r.ok()}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

}  // namespace ghinv
