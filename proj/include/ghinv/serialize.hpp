#pragma once

// JSON encodings for descriptors, matrices, witnesses and reports.
//   descriptor: {"kind":"Q"} | {"kind":"Z"} | {"kind":"Zn","n":26}
//               | {"kind":"Zp_local","p":2}
//   element:    "num/den" or an integer string; plain JSON integers are
//               accepted on input
//   matrix:     array of rows of elements

#include <json.hpp>

#include "ghinv/additive.hpp"
#include "ghinv/hirano.hpp"
#include "ghinv/oracle.hpp"

namespace ghinv {

inline constexpr const char* kSchemaVersion = "ghinv/1";

nlohmann::json to_json(const RingDescriptor& ring);
RingDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& j, const RingDescriptor& ring);

nlohmann::json to_json(const HiranoReport& r);
nlohmann::json to_json(const HiranoWitness& w);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const HiranoOutcome& o);
nlohmann::json to_json(const SumHypotheses& h);
nlohmann::json to_json(const AbsorbingHypotheses& h);
nlohmann::json to_json(const SeriesSum& s);
nlohmann::json to_json(const oracle::PropertyReport& r);

}  // namespace ghinv
