// Copyright 2026 The lotac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "lotac/pipeline.hpp"
#include "lotac/serialize.hpp"
#include "lotac/verify.hpp"

namespace {

using lotac::Certificate;
using lotac::Json;
using lotac::LotSpec;
using lotac::Word;

Word w(std::string_view text) { return lotac::parse_word(text); }

std::string schema_location(const std::string& text) {
  try {
    lotac::deserialize(text);
  } catch (const lotac::SchemaError& e) {
    return e.location();
  }
  return "";
}

lotac::VerificationReport check_json(const Json& doc, lotac::VerifyOptions opts = {}) {
  return lotac::verify(lotac::from_json(doc), opts);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(lotac::verify(lotac::certify(LotSpec(2, w("x1")))).accepted);
  Certificate cert = lotac::certify(LotSpec(3, w("x2")));
  auto report = lotac::verify(cert);
  EXPECT_TRUE(report.accepted);
  EXPECT_TRUE(report.snf_consistent);
  EXPECT_EQ(report.snf_trace.size(), 2u);

  // Point the first mul_right at a relator that does not exist.
  Json doc = lotac::to_json(cert);
  bool corrupted = false;
  for (auto& stage : doc["rounds"][0]["stages"]) {
    for (auto& mv : stage["moves"]) {
      if (!corrupted && mv["op"] == "mul_right") {
        mv["j"] = 17;
        corrupted = true;
      }
    }
  }
  ASSERT_TRUE(corrupted);
  report = check_json(doc);
  EXPECT_FALSE(report.accepted);
  ASSERT_TRUE(report.failing_step);
  EXPECT_NE(report.location.find("/rounds/0/stages/"), std::string::npos);
  EXPECT_NE(report.message.find("out of range"), std::string::npos);
}

TEST(Verify, RejectsEachKindOfTampering) {
  const Json good = lotac::to_json(lotac::certify(LotSpec(3, w("x3 x1"))));
  ASSERT_TRUE(check_json(good).accepted);

  Json doc = good;
  doc["version"] = "lotac-cert/0";
  EXPECT_EQ(check_json(doc).location, "/version");

  doc = good;
  doc["final"]["rels"][0] = "x1 x2^-2";
  EXPECT_EQ(check_json(doc).location, "/final");

  doc = good;
  doc["leaf"]["citation"] = "trust me";
  EXPECT_EQ(check_json(doc).location, "/leaf");

  // Final conjugator x2 splits at m = 2, so (C1) cannot be claimed.
  doc = lotac::to_json(lotac::certify(LotSpec(3, w("x2"))));
  doc["leaf"]["kind"] = "c1";
  doc["leaf"]["citation"] = std::string(lotac::leaf_citation(lotac::LeafKind::kC1));
  EXPECT_EQ(check_json(doc).location, "/leaf");

  doc = good;
  doc["leaf"]["conjugator"] = "x2";
  EXPECT_EQ(check_json(doc).location, "/leaf");

  doc = good;
  doc["rounds"][0]["stages"][6]["moves"].clear();  // keep x1
  EXPECT_FALSE(check_json(doc).accepted);

  // Annotations are commentary; changing them is harmless.
  doc = good;
  doc["rounds"][0]["annotations"]["successor"] = "x1";
  EXPECT_TRUE(check_json(doc).accepted);
}

TEST(Verify, FreeLeaf) {
  Certificate cert;
  cert.initial = lotac::Presentation({lotac::GeneratorId("x1"), lotac::GeneratorId("z1")},
                                     {w("z1")});
  lotac::Round round;
  round.kind = "reduce";
  round.stages.push_back({"destabilize", {lotac::move::Destabilize{lotac::GeneratorId("z1"), 0}}});
  cert.rounds.push_back(round);
  cert.leaf = lotac::make_leaf(lotac::LeafKind::kFree, 1, Word());
  cert.final = lotac::chain_presentation(1, Word());
  auto report = lotac::verify(cert, {true});
  EXPECT_TRUE(report.accepted);
  EXPECT_TRUE(report.snf_consistent);

  cert.initial = lotac::Presentation({lotac::GeneratorId("x1")}, {w("x1^2")});
  cert.rounds.clear();
  cert.final = cert.initial;
  EXPECT_FALSE(lotac::verify(cert).accepted);  // not relator-free
}

TEST(Verify, NeverThrowsOnOddCertificates) {
  Certificate cert;  // default: empty presentations, oneRelator leaf
  auto report = lotac::verify(cert);
  EXPECT_FALSE(report.accepted);
  EXPECT_EQ(report.location, "/leaf");
}

TEST(Serialize, RoundTripIsByteStable) {
  for (const char* u : {"x3 x1", "1", "x2 x3^-1 x1"}) {
    Certificate cert = lotac::certify(LotSpec(3, w(u)));
    std::string text = lotac::serialize(cert);
    Certificate back = lotac::deserialize(text);
    EXPECT_EQ(back, cert);
    EXPECT_EQ(lotac::serialize(back), text);
    EXPECT_EQ(lotac::serialize(lotac::certify(LotSpec(3, w(u)))), text);
  }
  Certificate corollary = lotac::certify_corollary(lotac::CorollarySpec(3, w("x2"), {2, 0}));
  EXPECT_EQ(lotac::deserialize(lotac::serialize(corollary)), corollary);
}

TEST(Serialize, EmptyRoundsRoundTrip) {
  Certificate cert = lotac::certify(LotSpec(2, w("x1 x2")));
  ASSERT_TRUE(cert.rounds.empty());
  Certificate back = lotac::deserialize(lotac::serialize(cert));
  EXPECT_EQ(back, cert);
  EXPECT_TRUE(lotac::verify(back).accepted);
}

TEST(Serialize, Layout) {
  Json doc = lotac::to_json(lotac::certify(LotSpec(3, w("x3 x1"))));
  std::vector<std::string> keys;
  for (auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "initial", "rounds", "leaf", "final"}));
  EXPECT_EQ(doc["initial"]["gens"], Json::parse(R"(["x1","x2","x3"])"));
  EXPECT_EQ(doc["rounds"][0]["stages"][0]["stage"], "stabilize");
  EXPECT_EQ(doc["rounds"][0]["stages"][0]["moves"][0],
            Json::parse(R"({"op":"stabilize","gen":"z1"})"));
  EXPECT_EQ(doc["leaf"]["kind"], "one-relator");
  EXPECT_EQ(doc["final"]["rels"][0], "x1 x2 x1 x2^-1 x1^-1 x2^-1");
  const auto& factors = doc["rounds"][0]["annotations"]["witnesses"][0]["factors"];
  ASSERT_FALSE(factors.empty());
  EXPECT_TRUE(factors[0].contains("conj") && factors[0].contains("rel") &&
              factors[0].contains("sign"));
}

TEST(Deserialize, SchemaErrorsCarryLocations) {
  const std::string text = lotac::serialize(lotac::certify(LotSpec(3, w("x2"))));
  EXPECT_EQ(schema_location(text.substr(0, text.size() / 2)), "/");
  EXPECT_EQ(schema_location(""), "/");
  EXPECT_EQ(schema_location("[]"), "/");

  Json doc = Json::parse(text);
  auto located = [&](const std::function<void(Json&)>& edit) {
    Json copy = doc;
    edit(copy);
    return schema_location(copy.dump());
  };
  EXPECT_EQ(located([](Json& d) { d.erase("leaf"); }), "/leaf");
  EXPECT_EQ(located([](Json& d) { d["initial"]["rels"][1] = "x1 ^"; }), "/initial/rels/1");
  EXPECT_EQ(located([](Json& d) { d["initial"]["gens"][0] = 7; }), "/initial/gens/0");
  EXPECT_EQ(located([](Json& d) { d["initial"]["rels"][0] = "x9"; }), "/initial");
  EXPECT_EQ(located([](Json& d) { d["rounds"][0]["stages"][1]["moves"][0]["op"] = "teleport"; }),
            "/rounds/0/stages/1/moves/0/op");
  EXPECT_EQ(located([](Json& d) { d["rounds"][0]["stages"][1]["moves"][0]["i"] = -1; }),
            "/rounds/0/stages/1/moves/0/i");
  EXPECT_EQ(located([](Json& d) { d["rounds"][0]["stages"][0]["moves"][0]["gen"] = "9z"; }),
            "/rounds/0/stages/0/moves/0/gen");
  EXPECT_EQ(located([](Json& d) { d["leaf"]["kind"] = "magic"; }), "/leaf/kind");
  EXPECT_EQ(located([](Json& d) { d["leaf"]["m"] = 1e12; }), "/leaf/m");
  EXPECT_EQ(located([](Json& d) { d["rounds"] = Json::object(); }), "/rounds");
  EXPECT_EQ(located([](Json& d) {
              d["rounds"][0]["annotations"]["witnesses"][0]["factors"][0]["sign"] = 2;
            }),
            "/rounds/0/annotations/witnesses/0/factors/0/sign");
}

TEST(LocateStep, MapsFlatIndices) {
  Certificate cert = lotac::certify(LotSpec(4, w("x2 x3")));
  auto moves = lotac::flatten_moves(cert);
  ASSERT_EQ(moves.size(), cert.move_count());
  auto loc = lotac::locate_step(cert, 0);
  ASSERT_TRUE(loc);
  EXPECT_EQ(loc->round, 0u);
  EXPECT_EQ(loc->offset, 0u);
  auto last = lotac::locate_step(cert, moves.size() - 1);
  ASSERT_TRUE(last);
  EXPECT_EQ(last->round, cert.rounds.size() - 1);
  EXPECT_FALSE(lotac::locate_step(cert, moves.size()));
}

}  // namespace
