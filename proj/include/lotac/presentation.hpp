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

// Finite presentations and the LOT chain constructors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lotac/smith.hpp"
#include "lotac/word.hpp"

namespace lotac {

// Generators are kept in natural name order, so a presentation is determined
// by its generator set and its ordered relator list.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::vector<GeneratorId> generators, std::vector<Word> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    std::sort(generators_.begin(), generators_.end());
    for (std::size_t i = 1; i < generators_.size(); ++i) {
      if (generators_[i - 1] == generators_[i]) {
        throw Error(ErrorKind::kInvalidPresentation,
                    "duplicate generator " + generators_[i].name());
      }
    }
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      for (const Letter& l : relators_[i]) {
        if (!has_generator(l.gen)) {
          throw Error(ErrorKind::kInvalidPresentation,
                      "relator " + std::to_string(i) + " uses unlisted " +
                          "generator " + l.gen.name());
        }
      }
    }
  }

  const std::vector<GeneratorId>& generators() const noexcept {
    return generators_;
  }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const Word& relator(std::size_t i) const { return relators_.at(i); }

  bool has_generator(const GeneratorId& g) const {
    return std::binary_search(generators_.begin(), generators_.end(), g);
  }
  std::size_t generator_position(const GeneratorId& g) const {
    return static_cast<std::size_t>(
        std::lower_bound(generators_.begin(), generators_.end(), g) -
        generators_.begin());
  }

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<GeneratorId> generators_;
  std::vector<Word> relators_;
};

// Header "gens: ..." then one "rel[i]: <word>" line per relator.
inline std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators()) out << ' ' << g.name();
  out << '\n';
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    out << "rel[" << i << "]: " << format_word(p.relator(i)) << '\n';
  }
  return out.str();
}

// Chain spec: m generators x1..xm and conjugating word u.
struct LotSpec {
  int m = 2;
  Word u;

  LotSpec() = default;
  LotSpec(int m_, Word u_) : m(m_), u(std::move(u_)) {
    if (m < 2) {
      throw Error(ErrorKind::kInvalidArgument, "chain size m must be >= 2");
    }
    require_chain_word(u, m, "LotSpec");
  }

  bool operator==(const LotSpec&) const = default;
};

inline std::vector<GeneratorId> chain_generators(int m) {
  std::vector<GeneratorId> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(GeneratorId::base(i));
  return gens;
}

// Relator c x_i c^-1 x_{i+1}^-1.
inline Word chain_relator(const Word& c, int i) {
  return concat(conjugate(letter_word(base_letter(i)), c),
                letter_word(base_letter(i + 1, -1)));
}

// Chain presentation with conjugator c: relator i-1 is c x_i c^-1 x_{i+1}^-1.
// `m` may be 1 here, giving the relator-free presentation on x1.
inline Presentation chain_presentation(int m, const Word& c) {
  std::vector<Word> rels;
  for (int i = 1; i < m; ++i) rels.push_back(chain_relator(c, i));
  return Presentation(chain_generators(m), std::move(rels));
}

inline Presentation build_presentation_1(const LotSpec& spec) {
  return chain_presentation(spec.m, spec.u);
}

// Conjugator U1^alpha U2 of the reduced presentation.
inline Word reduced_conjugator(const Split& split, int m) {
  return concat(alpha_shift(split.u1, m), split.u2);
}

inline Presentation build_presentation_3(const LotSpec& spec,
                                         const Split& split) {
  auto expected = decompose(spec.u, spec.m);
  bool valid = split.split_index <= spec.u.size() &&
               slice(spec.u, 0, split.split_index) == split.u2 &&
               slice(spec.u, split.split_index, spec.u.size()) == split.u1 &&
               expected.has_value();
  if (valid) {
    for (const Letter& l : split.u1) valid = valid && l.gen.base_index() != spec.m;
    for (const Letter& l : split.u2) valid = valid && l.gen.base_index() != 1;
  }
  if (!valid) {
    throw Error(ErrorKind::kNotDecomposable,
                "split does not decompose " + format_word(spec.u));
  }
  return chain_presentation(spec.m, reduced_conjugator(split, spec.m));
}

// Exponent-sum matrix: rows are relators, columns follow generators().
inline IntMatrix abelian_matrix(const Presentation& p) {
  IntMatrix mat(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    for (const Letter& l : p.relator(r)) {
      mat(r, p.generator_position(l.gen)) += l.sign;
    }
  }
  return mat;
}

// Abelianization Z^free_rank + sum Z/torsion_i.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // non-unit invariant factors

  bool operator==(const AbelianInvariants&) const = default;
};

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  auto factors = smith_invariant_factors(abelian_matrix(p));
  AbelianInvariants out;
  out.free_rank = p.generator_count() - factors.size();
  for (auto d : factors) {
    if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

inline std::string format_invariants(const AbelianInvariants& inv) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (inv.free_rank > 0) {
    sep();
    out << "Z";
    if (inv.free_rank > 1) out << "^" << inv.free_rank;
  }
  for (auto d : inv.torsion) {
    sep();
    out << "Z/" << d;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace lotac
