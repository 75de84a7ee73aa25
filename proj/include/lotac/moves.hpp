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

// Elementary Andrews-Curtis and Tietze moves, and the replay kernel.
//
// This is the trusted base of certificate checking: it depends only on
// word.hpp and presentation.hpp.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lotac/presentation.hpp"
#include "lotac/word.hpp"

namespace lotac {

namespace move {

// R_i <- R_i^-1
struct Invert {
  std::size_t i;
  bool operator==(const Invert&) const = default;
};
// R_i <- R_i R_j, i != j
struct MultiplyRight {
  std::size_t i, j;
  bool operator==(const MultiplyRight&) const = default;
};
// R_i <- w R_i w^-1
struct Conjugate {
  std::size_t i;
  Word w;
  bool operator==(const Conjugate&) const = default;
};
struct Swap {
  std::size_t i, j;
  bool operator==(const Swap&) const = default;
};
// New generator g with new last relator g.
struct Stabilize {
  GeneratorId g;
  bool operator==(const Stabilize&) const = default;
};
// Removes generator g and relator i, which must be g or g^-1.
struct Destabilize {
  GeneratorId g;
  std::size_t i;
  bool operator==(const Destabilize&) const = default;
};
// Removes generator g and relator i; g must occur exactly once in the whole
// relator list, in relator i.
struct ElimGenerator {
  GeneratorId g;
  std::size_t i;
  bool operator==(const ElimGenerator&) const = default;
};
// New generator g with new last relator w g^-1 (inverse of ElimGenerator).
struct IntroGenerator {
  GeneratorId g;
  Word w;
  bool operator==(const IntroGenerator&) const = default;
};
// Simultaneous renaming; pairs (from, to).
struct Rename {
  std::vector<std::pair<GeneratorId, GeneratorId>> map;
  bool operator==(const Rename&) const = default;
};

}  // namespace move

using Move = std::variant<move::Invert, move::MultiplyRight, move::Conjugate,
                          move::Swap, move::Stabilize, move::Destabilize,
                          move::ElimGenerator, move::IntroGenerator,
                          move::Rename>;

// Serialization tag of a move.
inline std::string move_tag(const Move& mv) {
  struct Visitor {
    std::string operator()(const move::Invert&) const { return "invert"; }
    std::string operator()(const move::MultiplyRight&) const {
      return "mul_right";
    }
    std::string operator()(const move::Conjugate&) const { return "conjugate"; }
    std::string operator()(const move::Swap&) const { return "swap"; }
    std::string operator()(const move::Stabilize&) const { return "stabilize"; }
    std::string operator()(const move::Destabilize&) const {
      return "destabilize";
    }
    std::string operator()(const move::ElimGenerator&) const {
      return "elim_gen";
    }
    std::string operator()(const move::IntroGenerator&) const {
      return "intro_gen";
    }
    std::string operator()(const move::Rename&) const { return "rename"; }
  };
  return std::visit(Visitor{}, mv);
}

inline std::string describe(const Move& mv) {
  struct Visitor {
    std::string operator()(const move::Invert& m) const {
      return "invert(" + std::to_string(m.i) + ")";
    }
    std::string operator()(const move::MultiplyRight& m) const {
      return "mul_right(" + std::to_string(m.i) + ", " + std::to_string(m.j) +
             ")";
    }
    std::string operator()(const move::Conjugate& m) const {
      return "conjugate(" + std::to_string(m.i) + ", " + format_word(m.w) + ")";
    }
    std::string operator()(const move::Swap& m) const {
      return "swap(" + std::to_string(m.i) + ", " + std::to_string(m.j) + ")";
    }
    std::string operator()(const move::Stabilize& m) const {
      return "stabilize(" + m.g.name() + ")";
    }
    std::string operator()(const move::Destabilize& m) const {
      return "destabilize(" + m.g.name() + ", " + std::to_string(m.i) + ")";
    }
    std::string operator()(const move::ElimGenerator& m) const {
      return "elim_gen(" + m.g.name() + ", " + std::to_string(m.i) + ")";
    }
    std::string operator()(const move::IntroGenerator& m) const {
      return "intro_gen(" + m.g.name() + ", " + format_word(m.w) + ")";
    }
    std::string operator()(const move::Rename& m) const {
      std::string out = "rename(";
      for (std::size_t k = 0; k < m.map.size(); ++k) {
        if (k) out += ", ";
        out += m.map[k].first.name() + "->" + m.map[k].second.name();
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, mv);
}

// An illegal application. The input presentation is never modified.
class MoveError : public Error {
 public:
  MoveError(const Move& mv, const std::string& violated)
      : Error(ErrorKind::kMove, describe(mv) + ": " + violated),
        move_(describe(mv)),
        violated_(violated) {}

  const std::string& move() const noexcept { return move_; }
  const std::string& violated() const noexcept { return violated_; }

 private:
  std::string move_;
  std::string violated_;
};

namespace detail {

class MoveApplier {
 public:
  MoveApplier(const Presentation& p, const Move& mv) : p_(p), mv_(mv) {}

  Presentation operator()(const move::Invert& m) const {
    check_index(m.i);
    auto rels = p_.relators();
    rels[m.i] = invert(rels[m.i]);
    return Presentation(p_.generators(), std::move(rels));
  }

  Presentation operator()(const move::MultiplyRight& m) const {
    check_index(m.i);
    check_index(m.j);
    if (m.i == m.j) fail("mul_right needs two distinct relators");
    auto rels = p_.relators();
    rels[m.i] = concat(rels[m.i], rels[m.j]);
    return Presentation(p_.generators(), std::move(rels));
  }

  Presentation operator()(const move::Conjugate& m) const {
    check_index(m.i);
    check_over_generators(m.w, "conjugating word");
    auto rels = p_.relators();
    rels[m.i] = conjugate(rels[m.i], m.w);
    return Presentation(p_.generators(), std::move(rels));
  }

  Presentation operator()(const move::Swap& m) const {
    check_index(m.i);
    check_index(m.j);
    auto rels = p_.relators();
    std::swap(rels[m.i], rels[m.j]);
    return Presentation(p_.generators(), std::move(rels));
  }

  Presentation operator()(const move::Stabilize& m) const {
    if (p_.has_generator(m.g)) fail(m.g.name() + " is already a generator");
    auto gens = p_.generators();
    gens.push_back(m.g);
    auto rels = p_.relators();
    rels.push_back(letter_word(m.g));
    return Presentation(std::move(gens), std::move(rels));
  }

  Presentation operator()(const move::Destabilize& m) const {
    check_index(m.i);
    if (!p_.has_generator(m.g)) fail(m.g.name() + " is not a generator");
    const Word& r = p_.relator(m.i);
    if (r.size() != 1 || !(r[0].gen == m.g)) {
      fail("relator " + std::to_string(m.i) + " is not the single letter " +
           m.g.name() + "^(+-1)");
    }
    for (std::size_t k = 0; k < p_.relator_count(); ++k) {
      if (k != m.i && occurs(p_.relator(k), m.g)) {
        fail(m.g.name() + " occurs in relator " + std::to_string(k));
      }
    }
    return remove(m.g, m.i);
  }

  Presentation operator()(const move::ElimGenerator& m) const {
    check_index(m.i);
    if (!p_.has_generator(m.g)) fail(m.g.name() + " is not a generator");
    for (std::size_t k = 0; k < p_.relator_count(); ++k) {
      std::size_t n = occurrences(p_.relator(k), m.g);
      if (k == m.i && n != 1) {
        fail(m.g.name() + " occurs " + std::to_string(n) +
             " times in relator " + std::to_string(k) + ", expected once");
      }
      if (k != m.i && n != 0) {
        fail(m.g.name() + " also occurs in relator " + std::to_string(k));
      }
    }
    return remove(m.g, m.i);
  }

  Presentation operator()(const move::IntroGenerator& m) const {
    if (p_.has_generator(m.g)) fail(m.g.name() + " is already a generator");
    check_over_generators(m.w, "defining word");
    auto gens = p_.generators();
    gens.push_back(m.g);
    auto rels = p_.relators();
    rels.push_back(concat(m.w, letter_word(m.g, -1)));
    return Presentation(std::move(gens), std::move(rels));
  }

  Presentation operator()(const move::Rename& m) const {
    std::set<GeneratorId> domain, targets;
    for (const auto& [from, to] : m.map) {
      if (!p_.has_generator(from)) fail(from.name() + " is not a generator");
      if (!domain.insert(from).second) fail(from.name() + " renamed twice");
      if (!targets.insert(to).second) fail("two generators renamed to " + to.name());
    }
    for (const auto& t : targets) {
      if (p_.has_generator(t) && !domain.count(t)) {
        fail("target " + t.name() + " collides with an untouched generator");
      }
    }
    auto image = [&](const GeneratorId& g) -> const GeneratorId& {
      for (const auto& [from, to] : m.map) {
        if (from == g) return to;
      }
      return g;
    };
    std::vector<GeneratorId> gens;
    for (const auto& g : p_.generators()) gens.push_back(image(g));
    std::vector<Word> rels;
    for (const Word& r : p_.relators()) {
      std::vector<Letter> raw;
      for (const Letter& l : r) raw.emplace_back(image(l.gen), l.sign);
      rels.push_back(free_reduce(raw));
    }
    return Presentation(std::move(gens), std::move(rels));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MoveError(mv_, why);
  }

  void check_index(std::size_t i) const {
    if (i >= p_.relator_count()) {
      fail("relator index " + std::to_string(i) + " out of range (" +
           std::to_string(p_.relator_count()) + " relators)");
    }
  }

  void check_over_generators(const Word& w, const char* what) const {
    for (const Letter& l : w) {
      if (!p_.has_generator(l.gen)) {
        fail(std::string(what) + " uses unknown generator " + l.gen.name());
      }
    }
  }

  Presentation remove(const GeneratorId& g, std::size_t i) const {
    std::vector<GeneratorId> gens;
    for (const auto& h : p_.generators()) {
      if (!(h == g)) gens.push_back(h);
    }
    std::vector<Word> rels;
    for (std::size_t k = 0; k < p_.relator_count(); ++k) {
      if (k != i) rels.push_back(p_.relator(k));
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  const Presentation& p_;
  const Move& mv_;
};

}  // namespace detail

// Applies one move. Throws MoveError naming the violated precondition.
inline Presentation apply(const Presentation& p, const Move& mv) {
  return std::visit(detail::MoveApplier(p, mv), mv);
}

struct ReplayFailure {
  std::size_t step;
  std::string move;
  std::string violated;
};

struct ReplayResult {
  Presentation presentation;             // last good presentation
  std::optional<ReplayFailure> failure;  // first illegal move, if any

  bool ok() const noexcept { return !failure.has_value(); }
};

// Left fold of apply; stops at the first illegal move.
inline ReplayResult replay(Presentation p, const std::vector<Move>& moves) {
  for (std::size_t s = 0; s < moves.size(); ++s) {
    try {
      p = lotac::apply(p, moves[s]);
    } catch (const MoveError& e) {
      return {std::move(p), ReplayFailure{s, e.move(), e.violated()}};
    } catch (const Error& e) {
      return {std::move(p), ReplayFailure{s, describe(moves[s]), e.what()}};
    }
  }
  return {std::move(p), std::nullopt};
}

}  // namespace lotac
