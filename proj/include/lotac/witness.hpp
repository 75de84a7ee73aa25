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

// Consequence witnesses: explicit products of conjugated relators.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lotac/presentation.hpp"
#include "lotac/word.hpp"

namespace lotac {

// One factor conj * R_rel^sign * conj^-1.
struct WitnessFactor {
  Word conj;
  std::size_t rel = 0;
  int sign = 1;

  bool operator==(const WitnessFactor&) const = default;
};

// Ordered product of conjugated relators.
struct Witness {
  std::vector<WitnessFactor> factors;

  bool empty() const noexcept { return factors.empty(); }
  bool operator==(const Witness&) const = default;
};

// The reduced free-group product the witness denotes.
inline Word evaluate_witness(const Witness& wit, const Presentation& p) {
  Word out;
  for (const auto& f : wit.factors) {
    if (f.rel >= p.relator_count()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "witness cites relator " + std::to_string(f.rel) + " of " +
                      std::to_string(p.relator_count()));
    }
    const Word& r = p.relator(f.rel);
    out = concat(out, conjugate(f.sign > 0 ? r : invert(r), f.conj));
  }
  return out;
}

inline Witness inverse(const Witness& wit) {
  Witness out;
  for (auto it = wit.factors.rbegin(); it != wit.factors.rend(); ++it) {
    out.factors.push_back({it->conj, it->rel, -it->sign});
  }
  return out;
}

// Witness for c * eval(wit) * c^-1.
inline Witness conjugated(const Witness& wit, const Word& c) {
  Witness out;
  for (const auto& f : wit.factors) {
    out.factors.push_back({concat(c, f.conj), f.rel, f.sign});
  }
  return out;
}

}  // namespace lotac
