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

// Asphericity-reduction certificates.
//
// A certificate claims that `initial` is transformed into `final` by the
// listed moves and that `final` is aspherical for a cited reason (the leaf).

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotac/moves.hpp"
#include "lotac/presentation.hpp"
#include "lotac/witness.hpp"

namespace lotac {

inline constexpr std::string_view kCertificateVersion = "lotac-cert/1";

enum class LeafKind { kOneRelator, kC1, kFree };

inline std::string_view leaf_name(LeafKind kind) {
  switch (kind) {
    case LeafKind::kOneRelator: return "one-relator";
    case LeafKind::kC1: return "c1";
    case LeafKind::kFree: return "free";
  }
  return "";
}

inline std::optional<LeafKind> parse_leaf_kind(std::string_view name) {
  for (auto k : {LeafKind::kOneRelator, LeafKind::kC1, LeafKind::kFree}) {
    if (leaf_name(k) == name) return k;
  }
  return std::nullopt;
}

inline std::string_view leaf_citation(LeafKind kind) {
  switch (kind) {
    case LeafKind::kOneRelator:
      return "Lyndon, via [LS77]: one-relator presentation, relator not a "
             "proper power";
    case LeafKind::kC1:
      return "claim (C1), [IK01]: chain presentation with non-decomposable "
             "conjugator";
    case LeafKind::kFree:
      return "no relators: the presentation complex is a graph";
  }
  return "";
}

// The presentation a certificate ends at, and why it is aspherical. For
// kOneRelator and kC1 the final presentation must be the chain presentation
// of (m, conjugator).
struct Leaf {
  LeafKind kind = LeafKind::kOneRelator;
  std::string citation;
  int m = 2;
  Word conjugator;

  bool operator==(const Leaf&) const = default;
};

struct Stage {
  std::string name;
  std::vector<Move> moves;

  bool operator==(const Stage&) const = default;
};

// Consequence used in a round: `witness` evaluates to `claim` over the
// presentation reached at the start of `stage`.
struct WitnessNote {
  std::string stage;
  std::size_t relator = 0;  // relator multiplied by the consequence
  Word claim;
  Witness witness;

  bool operator==(const WitnessNote&) const = default;
};

// Non-normative round metadata; ignored by verification.
struct RoundNotes {
  std::optional<int> m;
  std::optional<Word> conjugator;
  std::optional<std::size_t> split_index;
  std::optional<Word> successor;
  std::vector<WitnessNote> witnesses;

  bool operator==(const RoundNotes&) const = default;
};

struct Round {
  std::string kind;  // "reduce" or "normalize"
  std::vector<Stage> stages;
  RoundNotes notes;

  bool operator==(const Round&) const = default;
};

struct Certificate {
  std::string version{kCertificateVersion};
  Presentation initial;
  std::vector<Round> rounds;
  Leaf leaf;
  Presentation final;

  std::size_t move_count() const {
    std::size_t n = 0;
    for (const auto& r : rounds) {
      for (const auto& s : r.stages) n += s.moves.size();
    }
    return n;
  }

  bool operator==(const Certificate&) const = default;
};

// Where step `index` lives: round, stage and position within the stage.
struct StepLocation {
  std::size_t round = 0;
  std::size_t stage = 0;
  std::size_t offset = 0;
};

inline std::vector<Move> flatten_moves(const Certificate& cert) {
  std::vector<Move> out;
  for (const auto& r : cert.rounds) {
    for (const auto& s : r.stages) {
      out.insert(out.end(), s.moves.begin(), s.moves.end());
    }
  }
  return out;
}

inline std::optional<StepLocation> locate_step(const Certificate& cert,
                                               std::size_t index) {
  std::size_t base = 0;
  for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
    const auto& stages = cert.rounds[r].stages;
    for (std::size_t s = 0; s < stages.size(); ++s) {
      if (index < base + stages[s].moves.size()) {
        return StepLocation{r, s, index - base};
      }
      base += stages[s].moves.size();
    }
  }
  return std::nullopt;
}

}  // namespace lotac
