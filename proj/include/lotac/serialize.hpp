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

// JSON certificate documents.
//
//   {"version", "initial": {"gens", "rels"},
//    "rounds": [{"round", "kind", "stages": [{"stage", "moves"}],
//                "annotations"}],
//    "leaf": {"kind", "citation", "m", "conjugator"},
//    "final": {"gens", "rels"}}
//
// Words use the text grammar of format_word. Output is canonical: keys are
// emitted in a fixed order regardless of input order.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lotac/certificate.hpp"
#include "lotac/moves.hpp"
#include "lotac/presentation.hpp"
#include "lotac/word.hpp"

namespace lotac {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array(), rels = Json::array();
  for (const auto& g : p.generators()) gens.push_back(g.name());
  for (const auto& r : p.relators()) rels.push_back(format_word(r));
  return Json{{"gens", gens}, {"rels", rels}};
}

inline Json witness_to_json(const Witness& w) {
  Json out = Json::array();
  for (const auto& f : w.factors) {
    out.push_back({{"conj", format_word(f.conj)}, {"rel", f.rel}, {"sign", f.sign}});
  }
  return out;
}

inline Json move_to_json(const Move& mv) {
  struct Visitor {
    Json operator()(const move::Invert& m) const { return {{"i", m.i}}; }
    Json operator()(const move::MultiplyRight& m) const {
      return {{"i", m.i}, {"j", m.j}};
    }
    Json operator()(const move::Conjugate& m) const {
      return {{"i", m.i}, {"word", format_word(m.w)}};
    }
    Json operator()(const move::Swap& m) const { return {{"i", m.i}, {"j", m.j}}; }
    Json operator()(const move::Stabilize& m) const {
      return {{"gen", m.g.name()}};
    }
    Json operator()(const move::Destabilize& m) const {
      return {{"gen", m.g.name()}, {"i", m.i}};
    }
    Json operator()(const move::ElimGenerator& m) const {
      return {{"gen", m.g.name()}, {"i", m.i}};
    }
    Json operator()(const move::IntroGenerator& m) const {
      return {{"gen", m.g.name()}, {"word", format_word(m.w)}};
    }
    Json operator()(const move::Rename& m) const {
      Json map = Json::array();
      for (const auto& [from, to] : m.map) {
        map.push_back({{"from", from.name()}, {"to", to.name()}});
      }
      return {{"map", map}};
    }
  };
  Json out{{"op", move_tag(mv)}};
  Json fields = std::visit(Visitor{}, mv);
  for (auto& [key, value] : fields.items()) out[key] = value;
  return out;
}

// Typed field access on hostile input; every failure names its JSON pointer.
class Reader {
 public:
  Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError(path_.empty() ? "/" : path_, what);
  }

  Reader field(std::string_view key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(std::string(key));
    if (it == node_.end()) {
      throw SchemaError(path_ + "/" + std::string(key), "missing field");
    }
    return Reader(*it, path_ + "/" + std::string(key));
  }

  bool has(std::string_view key) const {
    return node_.is_object() && node_.contains(std::string(key));
  }

  std::vector<Reader> elements() const {
    if (!node_.is_array()) fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < node_.size(); ++i) {
      out.emplace_back(node_[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }

  std::string string() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }

  std::size_t index() const {
    if (!node_.is_number_integer() ||
        (!node_.is_number_unsigned() && node_.get<std::int64_t>() < 0)) {
      fail("expected a non-negative integer");
    }
    auto v = node_.get<std::uint64_t>();
    if (v > SIZE_MAX) fail("index too large");
    return static_cast<std::size_t>(v);
  }

  int integer() const {
    if (!node_.is_number_integer()) fail("expected an integer");
    auto v = node_.get<std::int64_t>();
    if (v < INT32_MIN || v > INT32_MAX) fail("integer out of range");
    return static_cast<int>(v);
  }

  Word word() const {
    std::string text = string();
    try {
      return parse_word(text);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  GeneratorId generator() const {
    std::string text = string();
    if (!GeneratorId::valid_name(text)) fail("invalid generator name");
    return GeneratorId(text);
  }

 private:
  const Json& node_;
  std::string path_;
};

inline Presentation read_presentation(const Reader& r) {
  std::vector<GeneratorId> gens;
  for (const auto& g : r.field("gens").elements()) gens.push_back(g.generator());
  std::vector<Word> rels;
  for (const auto& w : r.field("rels").elements()) rels.push_back(w.word());
  try {
    return Presentation(std::move(gens), std::move(rels));
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

inline Witness read_witness(const Reader& r) {
  Witness out;
  for (const auto& f : r.elements()) {
    int sign = f.field("sign").integer();
    if (sign != 1 && sign != -1) f.field("sign").fail("sign must be +1 or -1");
    out.factors.push_back({f.field("conj").word(), f.field("rel").index(), sign});
  }
  return out;
}

inline Move read_move(const Reader& r) {
  const std::string op = r.field("op").string();
  if (op == "invert") return move::Invert{r.field("i").index()};
  if (op == "mul_right") {
    return move::MultiplyRight{r.field("i").index(), r.field("j").index()};
  }
  if (op == "conjugate") {
    return move::Conjugate{r.field("i").index(), r.field("word").word()};
  }
  if (op == "swap") return move::Swap{r.field("i").index(), r.field("j").index()};
  if (op == "stabilize") return move::Stabilize{r.field("gen").generator()};
  if (op == "destabilize") {
    return move::Destabilize{r.field("gen").generator(), r.field("i").index()};
  }
  if (op == "elim_gen") {
    return move::ElimGenerator{r.field("gen").generator(), r.field("i").index()};
  }
  if (op == "intro_gen") {
    return move::IntroGenerator{r.field("gen").generator(),
                                r.field("word").word()};
  }
  if (op == "rename") {
    move::Rename out;
    for (const auto& pair : r.field("map").elements()) {
      out.map.emplace_back(pair.field("from").generator(),
                           pair.field("to").generator());
    }
    return out;
  }
  r.field("op").fail("unknown move tag '" + op + "'");
}

inline Json notes_to_json(const RoundNotes& n) {
  Json out = Json::object();
  if (n.m) out["m"] = *n.m;
  if (n.conjugator) out["conjugator"] = format_word(*n.conjugator);
  if (n.split_index) out["split_index"] = *n.split_index;
  if (n.successor) out["successor"] = format_word(*n.successor);
  if (!n.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : n.witnesses) {
      ws.push_back({{"stage", w.stage},
                    {"relator", w.relator},
                    {"claim", format_word(w.claim)},
                    {"factors", witness_to_json(w.witness)}});
    }
    out["witnesses"] = ws;
  }
  return out;
}

inline RoundNotes read_notes(const Reader& r) {
  if (!r.node().is_object()) r.fail("expected an object");
  RoundNotes n;
  if (r.has("m")) n.m = r.field("m").integer();
  if (r.has("conjugator")) n.conjugator = r.field("conjugator").word();
  if (r.has("split_index")) n.split_index = r.field("split_index").index();
  if (r.has("successor")) n.successor = r.field("successor").word();
  if (r.has("witnesses")) {
    for (const auto& w : r.field("witnesses").elements()) {
      n.witnesses.push_back({w.field("stage").string(),
                             w.field("relator").index(),
                             w.field("claim").word(),
                             read_witness(w.field("factors"))});
    }
  }
  return n;
}

}  // namespace detail

inline Json to_json(const Certificate& cert) {
  using namespace detail;
  Json rounds = Json::array();
  for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
    const Round& round = cert.rounds[r];
    Json stages = Json::array();
    for (const auto& s : round.stages) {
      Json moves = Json::array();
      for (const auto& mv : s.moves) moves.push_back(move_to_json(mv));
      stages.push_back({{"stage", s.name}, {"moves", moves}});
    }
    rounds.push_back({{"round", r},
                      {"kind", round.kind},
                      {"stages", stages},
                      {"annotations", notes_to_json(round.notes)}});
  }
  return Json{{"version", cert.version},
              {"initial", presentation_to_json(cert.initial)},
              {"rounds", rounds},
              {"leaf",
               {{"kind", std::string(leaf_name(cert.leaf.kind))},
                {"citation", cert.leaf.citation},
                {"m", cert.leaf.m},
                {"conjugator", format_word(cert.leaf.conjugator)}}},
              {"final", presentation_to_json(cert.final)}};
}

inline std::string serialize(const Certificate& cert) {
  return to_json(cert).dump(1) + "\n";
}

// Throws SchemaError naming the offending location.
inline Certificate from_json(const Json& doc) {
  using namespace detail;
  Reader root(doc, "");
  if (!doc.is_object()) root.fail("expected an object");
  Certificate cert;
  cert.version = root.field("version").string();
  cert.initial = read_presentation(root.field("initial"));
  for (const auto& r : root.field("rounds").elements()) {
    Round round;
    round.kind = r.field("kind").string();
    for (const auto& s : r.field("stages").elements()) {
      Stage stage;
      stage.name = s.field("stage").string();
      for (const auto& mv : s.field("moves").elements()) {
        stage.moves.push_back(read_move(mv));
      }
      round.stages.push_back(std::move(stage));
    }
    if (r.has("annotations")) round.notes = read_notes(r.field("annotations"));
    cert.rounds.push_back(std::move(round));
  }
  Reader leaf = root.field("leaf");
  auto kind = parse_leaf_kind(leaf.field("kind").string());
  if (!kind) leaf.field("kind").fail("unknown leaf kind");
  cert.leaf.kind = *kind;
  cert.leaf.citation = leaf.field("citation").string();
  cert.leaf.m = leaf.field("m").integer();
  cert.leaf.conjugator = leaf.field("conjugator").word();
  cert.final = read_presentation(root.field("final"));
  return cert;
}

inline Certificate deserialize(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

}  // namespace lotac
