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

#include <random>

#include "lotac/pipeline.hpp"
#include "lotac/verify.hpp"
#include "oracle.hpp"

namespace {

using lotac::CorollarySpec;
using lotac::GeneratorId;
using lotac::LeafKind;
using lotac::LotSpec;
using lotac::Presentation;
using lotac::Word;

Word w(std::string_view text) { return lotac::parse_word(text); }

Presentation replay_stages(Presentation p, const std::vector<lotac::Stage>& stages,
                           const std::string& through) {
  for (const auto& s : stages) {
    auto r = lotac::replay(p, s.moves);
    EXPECT_TRUE(r.ok()) << s.name;
    p = r.presentation;
    if (s.name == through) break;
  }
  return p;
}

TEST(ReduceOnce, Examples) {
  struct Case {
    const char* u;
    const char* successor;
  };
  for (Case c : {Case{"x2", "x2"}, Case{"x3 x1", "x1 x2"}, Case{"1", "1"}}) {
    LotSpec spec(3, w(c.u));
    auto [plan, next] = lotac::reduce_once(spec);
    EXPECT_EQ(next, LotSpec(2, w(c.successor))) << c.u;
    auto split = lotac::decompose(spec.u, 3);
    Presentation p0 = lotac::build_presentation_1(spec);
    EXPECT_EQ(replay_stages(p0, plan.stages, "destabilize"),
              lotac::build_presentation_3(spec, *split));
    EXPECT_EQ(replay_stages(p0, plan.stages, ""), lotac::build_presentation_1(next));
  }
}

TEST(ReduceOnce, StageNamesAndIntermediateShapes) {
  LotSpec spec(4, w("x3 x4^-1 x2 x1"));
  auto [plan, next] = lotac::reduce_once(spec);
  std::vector<std::string> names;
  for (const auto& s : plan.stages) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"stabilize", "seed-consequence",
                                             "conjugator-swap", "collapse-R",
                                             "z-elimination", "destabilize",
                                             "x1-elimination", "rename"}));
  // U2 = x3 x4^-1, U1 = x2 x1, d = x3 x2 x3 x4^-1.
  const Word d = w("x3 x2 x3 x4^-1");
  EXPECT_EQ(next, LotSpec(3, lotac::reindex(d, -1)));
  Presentation p0 = lotac::build_presentation_1(spec);
  const Word z = w("z1");
  Presentation after_seed = replay_stages(p0, plan.stages, "seed-consequence");
  EXPECT_EQ(after_seed.relator(0), lotac::concat(z, d, lotac::invert(spec.u)));
  Presentation after_swap = replay_stages(p0, plan.stages, "conjugator-swap");
  for (int i = 1; i < 4; ++i) {
    EXPECT_EQ(after_swap.relator(static_cast<std::size_t>(i)),
              lotac::chain_relator(lotac::concat(z, d), i));
  }
  Presentation after_collapse = replay_stages(p0, plan.stages, "collapse-R");
  EXPECT_EQ(after_collapse.relator(0), z);
  EXPECT_EQ(plan.witnesses.size(), 3u);
}

TEST(ReduceOnce, Errors) {
  EXPECT_THROW(lotac::reduce_once(LotSpec(2, w("x1"))), lotac::Error);
  try {
    lotac::reduce_once(LotSpec(3, w("x1 x3")));
    FAIL();
  } catch (const lotac::Error& e) {
    EXPECT_EQ(e.kind(), lotac::ErrorKind::kNotDecomposable);
  }
}

TEST(ReduceOnce, WitnessNotesEvaluateToClaims) {
  LotSpec spec(3, w("x3 x2^-1 x1 x2"));
  auto [plan, next] = lotac::reduce_once(spec);
  Presentation p = lotac::build_presentation_1(spec);
  for (const auto& s : plan.stages) {
    for (const auto& note : plan.witnesses) {
      if (note.stage == s.name) {
        EXPECT_EQ(lotac::evaluate_witness(note.witness, p), note.claim) << s.name;
      }
    }
    p = lotac::replay(p, s.moves).presentation;
  }
}

TEST(Certify, Examples) {
  auto cert = lotac::certify(LotSpec(2, w("x1 x2")));
  EXPECT_TRUE(cert.rounds.empty());
  EXPECT_EQ(cert.leaf.kind, LeafKind::kOneRelator);
  EXPECT_TRUE(lotac::verify(cert).accepted);

  cert = lotac::certify(LotSpec(3, w("x1 x3")));
  EXPECT_TRUE(cert.rounds.empty());
  EXPECT_EQ(cert.leaf.kind, LeafKind::kC1);
  EXPECT_EQ(cert.leaf.conjugator, w("x1 x3"));

  cert = lotac::certify(LotSpec(4, w("x2 x3")));
  EXPECT_LE(cert.rounds.size(), 2u);
  EXPECT_TRUE(lotac::verify(cert).accepted);

  cert = lotac::certify(LotSpec(3, w("x3 x1")));
  EXPECT_EQ(cert.rounds.size(), 1u);
  EXPECT_EQ(cert.leaf.kind, LeafKind::kOneRelator);
  EXPECT_EQ(cert.final, lotac::build_presentation_1(LotSpec(2, w("x1 x2"))));
}

TEST(Certify, RandomSpecsVerifyAndTerminate) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 5;
    LotSpec spec(m, oracle::to_word(oracle::random_reduced(rng, m, trial % 9)));
    auto cert = lotac::certify(spec);
    EXPECT_LE(cert.rounds.size(), static_cast<std::size_t>(m - 2));
    auto report = lotac::verify(cert, {true});
    EXPECT_TRUE(report.accepted) << lotac::format_word(spec.u) << ": " << report.message;
    if (cert.leaf.kind == LeafKind::kC1) {
      EXPECT_FALSE(lotac::decompose(cert.leaf.conjugator, cert.leaf.m));
    }
  }
}

TEST(SplitPowerRelation, Examples) {
  CorollarySpec spec(2, w("x2"), {2});
  Presentation p = lotac::corollary_presentation(spec);
  auto r = lotac::replay(p, lotac::split_power_relation(p, spec, 1));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.presentation.generators(),
            (std::vector<GeneratorId>{GeneratorId("x1"), GeneratorId("x1_1"),
                                      GeneratorId("x2")}));
  EXPECT_EQ(r.presentation.relators(),
            (std::vector<Word>{w("x2 x1_1 x2^-2"), w("x2 x1 x2^-1 x1_1^-1")}));

  CorollarySpec empty(2, Word(), {2});
  p = lotac::corollary_presentation(empty);
  r = lotac::replay(p, lotac::split_power_relation(p, empty, 1));
  EXPECT_EQ(r.presentation.relators(),
            (std::vector<Word>{w("x1_1 x2^-1"), w("x1 x1_1^-1")}));

  CorollarySpec three(3, w("x3 x1"), {3, 1});
  p = lotac::corollary_presentation(three);
  r = lotac::replay(p, lotac::split_power_relation(p, three, 1));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.presentation.generator_count(), 5u);
  EXPECT_EQ(r.presentation.relator_count(), 4u);

  EXPECT_THROW(lotac::split_power_relation(p, CorollarySpec(3, w("x3 x1"), {1, 1}), 1),
               lotac::Error);
}

TEST(NormalizeExponents, Examples) {
  auto ones = lotac::normalize_exponents(CorollarySpec(3, w("x2 x1^-1"), {1, 1}));
  EXPECT_EQ(ones.m, 3);
  EXPECT_EQ(ones.conjugator, w("x2 x1^-1"));
  for (const auto& s : ones.stages) EXPECT_TRUE(s.moves.empty()) << s.name;

  auto split = lotac::normalize_exponents(CorollarySpec(3, w("x2"), {2, 1}));
  EXPECT_EQ(split.m, 4);
  // x1, x1_1, x2, x3 -> x1 .. x4, so U = x2 becomes x3.
  EXPECT_EQ(split.conjugator, w("x3"));
  EXPECT_EQ(split.normalized, lotac::build_presentation_1(LotSpec(4, w("x3"))));

  auto contracted = lotac::normalize_exponents(CorollarySpec(3, w("x3 x1"), {0, 1}));
  EXPECT_EQ(contracted.m, 2);
  EXPECT_EQ(contracted.normalized, lotac::chain_presentation(2, contracted.conjugator));
  // x2 is identified with x1 and x3 relabelled x2.
  EXPECT_EQ(contracted.conjugator, w("x2 x1"));

  auto gone = lotac::normalize_exponents(CorollarySpec(3, w("x2"), {0, 0}));
  EXPECT_EQ(gone.m, 1);
  EXPECT_EQ(gone.normalized.relator_count(), 0u);
  EXPECT_FALSE(gone.spec());
}

TEST(NormalizeExponents, NegativeExponents) {
  try {
    lotac::normalize_exponents(CorollarySpec(3, w("x2"), {1, -2}));
    FAIL();
  } catch (const lotac::Error& e) {
    EXPECT_EQ(e.kind(), lotac::ErrorKind::kNegativeExponent);
  }
}

TEST(NormalizeExponents, ReplaysToChainOfExpectedSize) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<int> ks;
    for (int i = 1; i < m; ++i) ks.push_back(static_cast<int>(rng() % 4));
    CorollarySpec spec(m, oracle::to_word(oracle::random_reduced(rng, m, trial % 5)), ks);
    auto norm = lotac::normalize_exponents(spec);
    Presentation p = replay_stages(lotac::corollary_presentation(spec), norm.stages, "");
    EXPECT_EQ(p, norm.normalized);
    int sum = 0;
    for (int k : ks) sum += k;
    EXPECT_EQ(norm.m, 1 + sum);
    EXPECT_EQ(static_cast<int>(norm.normalized.relator_count()), sum);
  }
}

TEST(CertifyCorollary, Verifies) {
  for (std::vector<int> ks : {std::vector<int>{2, 1}, {0, 3}, {0, 0}, {1, 1}, {3, 2}}) {
    auto cert = lotac::certify_corollary(CorollarySpec(3, w("x3 x1^-1 x2"), ks));
    auto report = lotac::verify(cert, {true});
    EXPECT_TRUE(report.accepted) << report.message;
    EXPECT_EQ(cert.rounds.front().kind, "normalize");
  }
  auto freed = lotac::certify_corollary(CorollarySpec(2, w("x1"), {0}));
  EXPECT_EQ(freed.leaf.kind, LeafKind::kFree);
  EXPECT_TRUE(lotac::verify(freed).accepted);
}

}  // namespace
