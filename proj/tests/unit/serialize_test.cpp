#include <doctest.h>

#include "ghinv/serialize.hpp"

using namespace ghinv;
using nlohmann::json;

TEST_CASE("descriptor round trip") {
  for (const auto& ring : {RingDescriptor::rationals(), RingDescriptor::integers(),
                           RingDescriptor::integers_mod(26), RingDescriptor::p_local(2)}) {
    CHECK(descriptor_from_json(to_json(ring)) == ring);
  }
  CHECK(to_json(RingDescriptor::integers_mod(26)) == json::parse(R"({"kind":"Zn","n":26})"));
  CHECK(to_json(RingDescriptor::p_local(2)) == json::parse(R"({"kind":"Zp_local","p":2})"));
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"kind":"R"})")), Error);
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"kind":"Zn"})")), Error);
  CHECK_THROWS_AS(descriptor_from_json(json::parse("3")), Error);
}

TEST_CASE("matrix encoding") {
  const auto q = RingDescriptor::rationals();
  const auto m = matrix_from_json(json::parse(R"([[1, "1/2"], ["-3", 0]])"), q);
  CHECK(m(0, 1) == RingElement::parse(q, "1/2"));
  CHECK(m(1, 0) == RingElement(q, -3));
  CHECK(to_json(m) == json::parse(R"([["1","1/2"],["-3","0"]])"));
  CHECK(matrix_from_json(to_json(m), q) == m);
  const auto z4 = RingDescriptor::integers_mod(4);
  CHECK(matrix_from_json(json::parse("[[7]]"), z4)(0, 0) == RingElement(z4, 3));

  auto code_of = [&](const char* text) {
    try {
      matrix_from_json(json::parse(text), q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code_of("[[1, 2], [3]]") == ErrorCode::kDimensionMismatch);
  CHECK(code_of("[]") == ErrorCode::kParse);
  CHECK(code_of("[[true]]") == ErrorCode::kParse);
  CHECK(code_of(R"([["x"]])") == ErrorCode::kParse);
}

TEST_CASE("witness and outcome encoding") {
  const auto z2 = RingDescriptor::p_local(2);
  const auto out = hirano_inverse(SquareMatrix::from_rows(z2, {{5, 6}, {3, 2}}));
  const json j = to_json(out);
  CHECK(j["exists"] == true);
  CHECK(j["case"] == "Mixed");
  for (const auto& [key, value] : j["checks"].items()) CHECK_MESSAGE(value == true, key);
  CHECK(matrix_from_json(j["h"], z2) == out.witness->h);

  const json none = to_json(hirano_inverse(SquareMatrix::from_rows(z2, {{1, 2}, {3, 4}})));
  CHECK(none["exists"] == false);
  CHECK(none["failed"] == "quadratic-unsolvable");
  CHECK(none["classification"]["det"] == "-2");
}
