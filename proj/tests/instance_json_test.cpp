#include <gtest/gtest.h>

#include "builders.hpp"
#include "depknap/error.hpp"
#include "depknap/instance_json.hpp"

namespace depknap {
namespace {

constexpr const char* kMicro = R"({
  "elements": [{"id": "e1", "value": 10, "weight": 5},
               {"id": "e2", "value": 8, "weight": 5},
               {"id": "e3", "value": 6, "weight": 5}],
  "capacity": 10,
  "dependencies": [{"from": "e1", "to": "e3", "quality": "+", "strength": 0.9}]
})";

TEST(InstanceJson, ParsesCanonicalExample) {
  const Instance inst = parse_instance(kMicro);
  EXPECT_EQ(inst, testing::micro_instance());
}

TEST(InstanceJson, DependenciesAreOptional) {
  const Instance inst = parse_instance(R"({"elements":[{"id":"a","value":1,"weight":2}],"capacity":3})");
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_TRUE(explicit_edges(inst.vdg).empty());
}

TEST(InstanceJson, AcceptsUnicodeMinus) {
  const Instance inst = parse_instance(
      R"({"elements":[{"id":"a","value":1,"weight":1},{"id":"b","value":1,"weight":1}],"capacity":1,
          "dependencies":[{"from":"a","to":"b","quality":"−","strength":0.5}]})");
  EXPECT_EQ(inst.vdg.quality(0, 1), Quality::Negative);
}

struct BadCase {
  const char* name;
  const char* text;
};

class InstanceJsonRejects : public ::testing::TestWithParam<BadCase> {};

TEST_P(InstanceJsonRejects, ThrowsInputError) {
  EXPECT_THROW(parse_instance(GetParam().text), InputError);
}

INSTANTIATE_TEST_SUITE_P(
    Schema, InstanceJsonRejects,
    ::testing::Values(
        BadCase{"malformed", R"({"elements": [)"},
        BadCase{"unknown_top", R"({"elements":[],"capacity":1,"extra":1})"},
        BadCase{"unknown_element_field",
                R"({"elements":[{"id":"a","value":1,"weight":1,"color":"red"}],"capacity":1})"},
        BadCase{"missing_capacity", R"({"elements":[{"id":"a","value":1,"weight":1}]})"},
        BadCase{"string_value", R"({"elements":[{"id":"a","value":"1","weight":1}],"capacity":1})"},
        BadCase{"zero_strength",
                R"({"elements":[{"id":"a","value":1,"weight":1},{"id":"b","value":1,"weight":1}],"capacity":1,
                    "dependencies":[{"from":"a","to":"b","quality":"+","strength":0}]})"},
        BadCase{"strength_above_one",
                R"({"elements":[{"id":"a","value":1,"weight":1},{"id":"b","value":1,"weight":1}],"capacity":1,
                    "dependencies":[{"from":"a","to":"b","quality":"+","strength":1.5}]})"},
        BadCase{"bad_quality",
                R"({"elements":[{"id":"a","value":1,"weight":1},{"id":"b","value":1,"weight":1}],"capacity":1,
                    "dependencies":[{"from":"a","to":"b","quality":"±","strength":0.5}]})"},
        BadCase{"unknown_endpoint",
                R"({"elements":[{"id":"a","value":1,"weight":1}],"capacity":1,
                    "dependencies":[{"from":"a","to":"zz","quality":"+","strength":0.5}]})"}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(InstanceJson, UnknownEndpointErrorNamesId) {
  try {
    parse_instance(R"({"elements":[{"id":"a","value":1,"weight":1}],"capacity":1,
                       "dependencies":[{"from":"a","to":"zz","quality":"+","strength":0.5}]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(InstanceJson, SemanticProblemsSurviveParsingForValidate) {
  const Instance inst = parse_instance(
      R"({"elements":[{"id":"a","value":-1,"weight":1},{"id":"a","value":1,"weight":1}],"capacity":1})");
  EXPECT_EQ(validate(inst).size(), 2u);
}

// Round trip is the identity on valid instances (generator output carries
// at most 12 significant digits).
TEST(InstanceJsonProperty, RoundTripIsIdentity) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = generate_instance({1 + seed % 12, 0.4, 0.5, seed});
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(back, inst) << "seed " << seed;
    EXPECT_EQ(serialize_instance(back), text);
  }
}

}  // namespace
}  // namespace depknap
