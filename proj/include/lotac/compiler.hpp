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

// Compilation of composite rewriting steps into elementary moves.
//
// A composite step either multiplies a relator by a consequence of the other
// relators or cancels every occurrence of a generator from a relator. The
// consequences are carried explicitly as Witness values.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lotac/moves.hpp"
#include "lotac/presentation.hpp"
#include "lotac/witness.hpp"
#include "lotac/word.hpp"

namespace lotac {

// Given chain relators R_{chain[i-1]} = c x_i c^-1 x_{i+1}^-1, returns a
// witness whose value is c w c^-1 (w^alpha)^-1 for w over x1..x_{m-1}.
//
// Each letter telescopes: c x_i c^-1 = R x_{i+1} and
// c x_i^-1 c^-1 = (x_{i+1}^-1 R^-1 x_{i+1}) x_{i+1}^-1, and the shifted
// letters to the left become the conjugator of the next factor.
inline Witness conjugation_derivation(const Presentation& p,
                                      const std::vector<std::size_t>& chain,
                                      const Word& c, const Word& w, int m) {
  if (m < 2 || chain.size() != static_cast<std::size_t>(m - 1)) {
    throw Error(ErrorKind::kChainMismatch,
                "chain must list m-1 relator indices");
  }
  for (int i = 1; i < m; ++i) {
    std::size_t r = chain[i - 1];
    if (r >= p.relator_count() || !(p.relator(r) == chain_relator(c, i))) {
      throw Error(ErrorKind::kChainMismatch,
                  "relator " + std::to_string(r) + " is not " +
                      format_word(chain_relator(c, i)));
    }
  }
  Witness out;
  Word shifted_prefix;
  for (const Letter& l : w) {
    int i = l.gen.base_index();
    if (i < 1 || i > m - 1) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "conjugation_derivation: " + l.gen.name() +
                      " is not among x1..x" + std::to_string(m - 1));
    }
    if (l.sign > 0) {
      out.factors.push_back({shifted_prefix, chain[i - 1], 1});
    } else {
      out.factors.push_back(
          {concat(shifted_prefix, letter_word(base_letter(i + 1, -1))),
           chain[i - 1], -1});
    }
    shifted_prefix =
        concat(shifted_prefix, letter_word(base_letter(i + 1, l.sign)));
  }
  return out;
}

// R_i <- R_i * conj R_j^sign conj^-1, leaving R_j as it was.
inline std::vector<Move> multiply_by_conjugate(std::size_t i, std::size_t j,
                                               const Word& conj, int sign) {
  if (i == j) {
    throw Error(ErrorKind::kSelfReference,
                "multiply_by_conjugate: relator " + std::to_string(i) +
                    " cannot absorb itself");
  }
  std::vector<Move> out;
  if (!conj.empty()) out.push_back(move::Conjugate{j, conj});
  if (sign < 0) out.push_back(move::Invert{j});
  out.push_back(move::MultiplyRight{i, j});
  if (sign < 0) out.push_back(move::Invert{j});
  if (!conj.empty()) out.push_back(move::Conjugate{j, invert(conj)});
  return out;
}

enum class Side { kRight, kLeft };

// R_i <- R_i * eval(wit) (kRight) or eval(wit) * R_i (kLeft). Left products
// go through inversion: (R_i^-1 eval(wit)^-1)^-1 = eval(wit) R_i.
inline std::vector<Move> multiply_by_witness(std::size_t i, const Witness& wit,
                                             Side side = Side::kRight) {
  for (const auto& f : wit.factors) {
    if (f.rel == i) {
      throw Error(ErrorKind::kSelfReference,
                  "witness cites its own target relator " + std::to_string(i));
    }
  }
  std::vector<Move> out;
  if (wit.empty()) return out;
  if (side == Side::kLeft) {
    out.push_back(move::Invert{i});
    auto inner = multiply_by_witness(i, inverse(wit), Side::kRight);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(move::Invert{i});
    return out;
  }
  for (const auto& f : wit.factors) {
    auto seq = multiply_by_conjugate(i, f.rel, f.conj, f.sign);
    out.insert(out.end(), seq.begin(), seq.end());
  }
  return out;
}

// Cancels every occurrence of g in relator i, left to right, using relator
// `def` in which g occurs exactly once. With def = a g^e b, an occurrence
// q g^f s is rewritten to q (b a) s when f = -e and to q (b a)^-1 s when
// f = e.
inline std::vector<Move> eliminate_occurrences(const Presentation& p,
                                               std::size_t i,
                                               const GeneratorId& g,
                                               std::size_t def) {
  if (i >= p.relator_count() || def >= p.relator_count()) {
    throw Error(ErrorKind::kIndexOutOfRange, "eliminate_occurrences: bad index");
  }
  if (i == def) {
    throw Error(ErrorKind::kSelfReference,
                "eliminate_occurrences: target is the defining relator");
  }
  const Word& d = p.relator(def);
  if (occurrences(d, g) != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                g.name() + " must occur exactly once in relator " +
                    std::to_string(def));
  }
  std::size_t at = 0;
  while (!(d[at].gen == g)) ++at;
  const int e = d[at].sign;
  const Word a_inv = invert(slice(d, 0, at));

  std::vector<Move> out;
  Word r = p.relator(i);
  while (occurs(r, g)) {
    std::size_t t = 0;
    while (!(r[t].gen == g)) ++t;
    const int f = r[t].sign;
    Word s_inv = invert(slice(r, t + 1, r.size()));
    Word conj = f == -e ? concat(s_inv, a_inv)
                        : concat(s_inv, letter_word(g, -e), a_inv);
    int sign = f == -e ? 1 : -1;
    auto seq = multiply_by_conjugate(i, def, conj, sign);
    out.insert(out.end(), seq.begin(), seq.end());
    r = concat(r, conjugate(sign > 0 ? d : invert(d), conj));
  }
  return out;
}

// Applies moves as they are emitted; any illegal move is a compiler bug.
class MoveTracker {
 public:
  explicit MoveTracker(Presentation p) : p_(std::move(p)) {}

  const Presentation& presentation() const noexcept { return p_; }

  void emit(const Move& mv) {
    try {
      p_ = lotac::apply(p_, mv);
    } catch (const MoveError& e) {
      throw Error(ErrorKind::kCompile, std::string("compiled move rejected: ") +
                                           e.what());
    }
    pending_.push_back(mv);
  }

  void emit(const std::vector<Move>& moves) {
    for (const auto& mv : moves) emit(mv);
  }

  // Moves emitted since the last call.
  std::vector<Move> take() { return std::exchange(pending_, {}); }

  void expect(bool condition, const std::string& what) const {
    if (!condition) {
      throw Error(ErrorKind::kCompile, "postcondition failed: " + what);
    }
  }

 private:
  Presentation p_;
  std::vector<Move> pending_;
};

}  // namespace lotac
