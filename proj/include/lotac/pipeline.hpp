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

// The recursive chain reduction and the power-relation preprocessing.
//
// One reduction round takes the chain presentation of (m, U) with
// U = U2 U1 decomposable to the chain presentation of (m-1, d') where
// d = U1^alpha U2 and d' is d with every index lowered by one:
//
//   stabilize          add z, move its relator to position 0
//   seed-consequence   R0 = z d U^-1
//   conjugator-swap    R_i = c x_i c^-1 x_{i+1}^-1 with c = z d
//   collapse-R         R0 = (U1^alpha)^-1 z U1^alpha, then R0 = z
//   z-elimination      R_i = d x_i d^-1 x_{i+1}^-1
//   destabilize        drop z: the chain presentation with conjugator d
//   x1-elimination     d avoids x1, so x1 occurs once, in relator 0
//   rename             x_i -> x_{i-1}

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lotac/certificate.hpp"
#include "lotac/compiler.hpp"
#include "lotac/moves.hpp"
#include "lotac/presentation.hpp"
#include "lotac/word.hpp"

namespace lotac {

struct RoundPlan {
  LotSpec spec;
  Split split;
  std::vector<Stage> stages;
  std::vector<WitnessNote> witnesses;
  LotSpec successor;
};

inline std::pair<RoundPlan, LotSpec> reduce_once(const LotSpec& spec) {
  const int m = spec.m;
  if (m <= 2) {
    throw Error(ErrorKind::kInvalidArgument, "reduce_once needs m > 2");
  }
  auto split = decompose(spec.u, m);
  if (!split) {
    throw Error(ErrorKind::kNotDecomposable,
                format_word(spec.u) + " has no split for m = " +
                    std::to_string(m));
  }
  const Word& u = spec.u;
  const Word u1_shifted = alpha_shift(split->u1, m);
  const Word d = concat(u1_shifted, split->u2);
  const GeneratorId z = GeneratorId::auxiliary(1);
  const Word z_word = letter_word(z);
  std::vector<std::size_t> chain;
  for (int i = 1; i < m; ++i) chain.push_back(static_cast<std::size_t>(i));

  RoundPlan plan{spec, *split, {}, {}, LotSpec(m - 1, reindex(d, -1))};
  MoveTracker t(build_presentation_1(spec));
  auto rel = [&](std::size_t i) -> const Word& {
    return t.presentation().relator(i);
  };
  auto close = [&](const char* name) {
    plan.stages.push_back({name, t.take()});
  };

  t.emit(move::Stabilize{z});
  for (auto k = static_cast<std::size_t>(m - 1); k >= 1; --k) {
    t.emit(move::Swap{k - 1, k});
  }
  t.expect(rel(0) == z_word, "z relator at position 0");
  close("stabilize");

  // d U^-1 = (U U1 U^-1 (U1^alpha)^-1)^-1
  const Witness seed = inverse(
      conjugation_derivation(t.presentation(), chain, u, split->u1, m));
  const Word seed_claim = concat(d, invert(u));
  t.expect(evaluate_witness(seed, t.presentation()) == seed_claim,
           "seed witness value");
  plan.witnesses.push_back({"seed-consequence", 0, seed_claim, seed});
  t.emit(multiply_by_witness(0, seed));
  t.expect(rel(0) == concat(z_word, seed_claim), "seeded R0");
  close("seed-consequence");

  // c x c^-1 x'^-1 = (R0 R R0^-1) R0 (x' R0^-1 x'^-1), since c = R0 U.
  const Word c = concat(z_word, d);
  for (int i = 1; i < m; ++i) {
    const auto ri = static_cast<std::size_t>(i);
    const Word r0 = rel(0);
    t.emit(move::Conjugate{ri, r0});
    t.emit(multiply_by_conjugate(ri, 0, Word(), 1));
    t.emit(multiply_by_conjugate(ri, 0, letter_word(base_letter(i + 1)), -1));
    t.expect(rel(ri) == chain_relator(c, i), "swapped conjugator");
  }
  close("conjugator-swap");

  // R0 <- (c U1^-1 c^-1 U1^alpha)^-1 R0 = (U1^alpha)^-1 z U1^alpha
  const Witness collapse = conjugation_derivation(
      t.presentation(), chain, c, invert(split->u1), m);
  const Word collapse_claim =
      concat(c, invert(split->u1), invert(c), u1_shifted);
  t.expect(evaluate_witness(collapse, t.presentation()) == collapse_claim,
           "collapse witness value");
  plan.witnesses.push_back({"collapse-R", 0, collapse_claim, collapse});
  t.emit(multiply_by_witness(0, inverse(collapse), Side::kLeft));
  t.expect(rel(0) == concat(invert(u1_shifted), z_word, u1_shifted),
           "collapsed R0");
  if (!u1_shifted.empty()) t.emit(move::Conjugate{0, u1_shifted});
  t.expect(rel(0) == z_word, "R0 = z");
  close("collapse-R");

  for (int i = 1; i < m; ++i) {
    const auto ri = static_cast<std::size_t>(i);
    t.emit(eliminate_occurrences(t.presentation(), ri, z, 0));
    t.expect(rel(ri) == chain_relator(d, i), "z eliminated");
  }
  close("z-elimination");

  t.emit(move::Destabilize{z, 0});
  t.expect(t.presentation() == build_presentation_3(spec, *split),
           "destabilized presentation is the reduced chain");
  close("destabilize");

  // U2 U1 (U1^alpha U2)^-1 over the reduced chain, i.e. U2 U1 = U1^alpha U2
  // there as well. Diagnostic only.
  {
    std::vector<std::size_t> reduced_chain;
    for (int i = 0; i < m - 1; ++i) {
      reduced_chain.push_back(static_cast<std::size_t>(i));
    }
    Witness eq = conjugated(conjugation_derivation(t.presentation(),
                                                   reduced_chain, d,
                                                   split->u1, m),
                            invert(u1_shifted));
    Word claim = concat(u, invert(d));
    t.expect(evaluate_witness(eq, t.presentation()) == claim,
             "reduced-chain identity");
    plan.witnesses.push_back({"x1-elimination", 0, claim, eq});
  }

  t.emit(move::ElimGenerator{GeneratorId::base(1), 0});
  close("x1-elimination");

  move::Rename rename;
  for (int i = 2; i <= m; ++i) {
    rename.map.emplace_back(GeneratorId::base(i), GeneratorId::base(i - 1));
  }
  t.emit(rename);
  t.expect(t.presentation() == build_presentation_1(plan.successor),
           "renamed presentation is the successor chain");
  close("rename");

  LotSpec successor = plan.successor;
  return {std::move(plan), std::move(successor)};
}

inline Round to_round(const RoundPlan& plan) {
  Round r;
  r.kind = "reduce";
  r.stages = plan.stages;
  r.notes.m = plan.spec.m;
  r.notes.conjugator = plan.spec.u;
  r.notes.split_index = plan.split.split_index;
  r.notes.successor = plan.successor.u;
  r.notes.witnesses = plan.witnesses;
  return r;
}

inline Leaf make_leaf(LeafKind kind, int m, Word conjugator) {
  return Leaf{kind, std::string(leaf_citation(kind)), m,
              std::move(conjugator)};
}

namespace detail {

// Appends theorem rounds for `spec` to `cert` and closes it with a leaf.
inline void certify_into(Certificate& cert, LotSpec spec) {
  while (true) {
    if (spec.m == 2) {
      cert.leaf = make_leaf(LeafKind::kOneRelator, 2, spec.u);
      break;
    }
    if (!decompose(spec.u, spec.m)) {
      cert.leaf = make_leaf(LeafKind::kC1, spec.m, spec.u);
      break;
    }
    auto [plan, next] = reduce_once(spec);
    cert.rounds.push_back(to_round(plan));
    spec = std::move(next);
  }
  cert.final = build_presentation_1(spec);
}

}  // namespace detail

// Reduces until m = 2 or the conjugator stops decomposing; at most m - 2
// rounds since m drops by one per round.
inline Certificate certify(const LotSpec& spec) {
  Certificate cert;
  cert.initial = build_presentation_1(spec);
  detail::certify_into(cert, spec);
  return cert;
}

// Chain with power conjugators: U^{k_i} x_i U^{-k_i} = x_{i+1}.
struct CorollarySpec {
  int m = 2;
  Word u;
  std::vector<int> exponents;

  CorollarySpec(int m_, Word u_, std::vector<int> exponents_)
      : m(m_), u(std::move(u_)), exponents(std::move(exponents_)) {
    if (m < 2) {
      throw Error(ErrorKind::kInvalidArgument, "chain size m must be >= 2");
    }
    require_chain_word(u, m, "CorollarySpec");
    if (exponents.size() != static_cast<std::size_t>(m - 1)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "expected " + std::to_string(m - 1) + " exponents, got " +
                      std::to_string(exponents.size()));
    }
  }
};

// U^k src U^-k dst^-1
inline Word power_relator(const Word& u, int k, const GeneratorId& src,
                          const GeneratorId& dst) {
  return concat(conjugate(letter_word(src), power(u, k)), letter_word(dst, -1));
}

inline Presentation corollary_presentation(const CorollarySpec& spec) {
  std::vector<Word> rels;
  for (int i = 1; i < spec.m; ++i) {
    rels.push_back(power_relator(spec.u, spec.exponents[i - 1],
                                 GeneratorId::base(i),
                                 GeneratorId::base(i + 1)));
  }
  return Presentation(chain_generators(spec.m), std::move(rels));
}

// Rewrites U^k x_i U^-k x_{i+1}^-1 (k >= 2) in `p` into the k relators
// U y_{j-1} U^-1 y_j^-1 with y_0 = x_i, y_k = x_{i+1} and fresh letters
// y_j = x<i>_<j>. Each y_j enters by a Tietze introduction; the power
// relator is then shortened by left multiplication with a conjugate of the
// new relator.
inline std::vector<Move> split_power_relation(const Presentation& p,
                                              const CorollarySpec& spec,
                                              int i) {
  if (i < 1 || i >= spec.m) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "split_power_relation: no edge " + std::to_string(i));
  }
  const int k = spec.exponents[i - 1];
  if (k < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "split_power_relation needs exponent >= 2, got " +
                    std::to_string(k));
  }
  const Word& u = spec.u;
  const GeneratorId src = GeneratorId::base(i), dst = GeneratorId::base(i + 1);
  const Word power_rel = power_relator(u, k, src, dst);
  const auto& rels = p.relators();
  auto found = std::find(rels.begin(), rels.end(), power_rel);
  if (found == rels.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "no relator " + format_word(power_rel) + " to split");
  }
  const auto r = static_cast<std::size_t>(found - rels.begin());

  MoveTracker t(p);
  GeneratorId prev = src;
  for (int j = 1; j < k; ++j) {
    GeneratorId fresh = GeneratorId::intermediate(i, j);
    t.emit(move::IntroGenerator{fresh, conjugate(letter_word(prev), u)});
    const std::size_t n = t.presentation().relator_count() - 1;
    t.emit(move::Invert{r});
    t.emit(multiply_by_conjugate(r, n, power(u, k - j), 1));
    t.emit(move::Invert{r});
    t.expect(t.presentation().relator(r) ==
                 power_relator(u, k - j, fresh, dst),
             "shortened power relator");
    prev = fresh;
  }
  return t.take();
}

struct NormalizeResult {
  Presentation normalized;  // chain presentation of (m, conjugator)
  int m = 1;
  Word conjugator;
  std::vector<Stage> stages;

  std::optional<LotSpec> spec() const {
    if (m < 2) return std::nullopt;
    return LotSpec(m, conjugator);
  }
};

namespace detail {

inline Word substitute(const Word& w, const GeneratorId& from,
                       const GeneratorId& to) {
  std::vector<Letter> raw;
  for (const Letter& l : w) raw.emplace_back(l.gen == from ? to : l.gen, l.sign);
  return free_reduce(raw);
}

}  // namespace detail

// Turns the power chain into an ordinary chain presentation: k >= 2 edges
// are split, k = 0 edges (x_i = x_{i+1}) are contracted by substituting
// x_i for x_{i+1} and eliminating x_{i+1}, and the surviving letters are
// sorted and relabelled x1..xm'.
inline NormalizeResult normalize_exponents(const CorollarySpec& spec) {
  for (std::size_t e = 0; e < spec.exponents.size(); ++e) {
    if (spec.exponents[e] < 0) {
      throw Error(ErrorKind::kNegativeExponent,
                  "exponent k" + std::to_string(e + 1) + " = " +
                      std::to_string(spec.exponents[e]) +
                      " is negative; only k >= 0 is supported");
    }
  }
  NormalizeResult out;
  MoveTracker t(corollary_presentation(spec));
  // Edge of each relator: it conjugates src[r] onto dst[r].
  std::vector<GeneratorId> src, dst;
  for (int i = 1; i < spec.m; ++i) {
    src.push_back(GeneratorId::base(i));
    dst.push_back(GeneratorId::base(i + 1));
  }
  auto close = [&](const char* name) { out.stages.push_back({name, t.take()}); };

  for (int i = 1; i < spec.m; ++i) {
    const int k = spec.exponents[i - 1];
    if (k < 2) continue;
    const auto r = static_cast<std::size_t>(
        std::find(src.begin(), src.end(), GeneratorId::base(i)) - src.begin());
    t.emit(split_power_relation(t.presentation(), spec, i));
    GeneratorId prev = GeneratorId::base(i);
    for (int j = 1; j < k; ++j) {
      GeneratorId fresh = GeneratorId::intermediate(i, j);
      src.push_back(prev);
      dst.push_back(fresh);
      prev = fresh;
    }
    src[r] = prev;
  }
  close("split-powers");

  Word u = spec.u;
  for (int i = spec.m - 1; i >= 1; --i) {
    if (spec.exponents[i - 1] != 0) continue;
    const GeneratorId keep = GeneratorId::base(i), drop = GeneratorId::base(i + 1);
    std::size_t e = 0;
    while (!(src[e] == keep && dst[e] == drop)) ++e;
    for (std::size_t r = 0; r < t.presentation().relator_count(); ++r) {
      if (r != e && occurs(t.presentation().relator(r), drop)) {
        t.emit(eliminate_occurrences(t.presentation(), r, drop, e));
      }
    }
    t.emit(move::ElimGenerator{drop, e});
    src.erase(src.begin() + static_cast<std::ptrdiff_t>(e));
    dst.erase(dst.begin() + static_cast<std::ptrdiff_t>(e));
    for (auto& g : src) if (g == drop) g = keep;
    for (auto& g : dst) if (g == drop) g = keep;
    u = detail::substitute(u, drop, keep);
  }
  close("contract-zeros");

  for (std::size_t pos = 0; pos < src.size(); ++pos) {
    std::size_t best = pos;
    for (std::size_t r = pos + 1; r < src.size(); ++r) {
      if (src[r] < src[best]) best = r;
    }
    if (best != pos) {
      t.emit(move::Swap{pos, best});
      std::swap(src[pos], src[best]);
      std::swap(dst[pos], dst[best]);
    }
  }
  close("reorder");

  const auto gens = t.presentation().generators();
  move::Rename relabel;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    GeneratorId target = GeneratorId::base(static_cast<int>(g + 1));
    if (!(gens[g] == target)) relabel.map.emplace_back(gens[g], target);
  }
  if (!relabel.map.empty()) t.emit(relabel);
  std::vector<Letter> raw;
  for (const Letter& l : u) {
    auto g = std::find(gens.begin(), gens.end(), l.gen) - gens.begin();
    raw.push_back(base_letter(static_cast<int>(g + 1), l.sign));
  }
  close("relabel");

  out.m = static_cast<int>(gens.size());
  out.conjugator = free_reduce(raw);
  out.normalized = t.presentation();
  t.expect(out.normalized == chain_presentation(out.m, out.conjugator),
           "normalized presentation is a chain presentation");
  return out;
}

// One normalize round followed by the theorem rounds of the normalized
// chain; a chain contracted to a single generator ends in a free leaf.
inline Certificate certify_corollary(const CorollarySpec& spec) {
  NormalizeResult norm = normalize_exponents(spec);
  Certificate cert;
  cert.initial = corollary_presentation(spec);
  Round r;
  r.kind = "normalize";
  r.stages = norm.stages;
  r.notes.m = norm.m;
  r.notes.successor = norm.conjugator;
  cert.rounds.push_back(std::move(r));
  if (auto s = norm.spec()) {
    detail::certify_into(cert, *s);
  } else {
    cert.leaf = make_leaf(LeafKind::kFree, norm.m, norm.conjugator);
    cert.final = norm.normalized;
  }
  return cert;
}

}  // namespace lotac
