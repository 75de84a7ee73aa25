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

// Independent certificate checking.
//
// Soundness rests on replaying every move through the kernel in moves.hpp and
// on the leaf side-conditions. Nothing here consults the compiler or the
// pipeline. Abelian invariants are recorded at round boundaries as a
// diagnostic; `strict` makes a change in them fatal.

#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "lotac/certificate.hpp"
#include "lotac/moves.hpp"
#include "lotac/presentation.hpp"
#include "lotac/word.hpp"

namespace lotac {

struct SnfPoint {
  std::string label;
  std::optional<AbelianInvariants> invariants;  // empty if it overflowed
};

struct VerificationReport {
  bool accepted = false;
  std::optional<std::size_t> failing_step;
  std::string location;  // where the rejection was detected
  std::string message;
  std::vector<SnfPoint> snf_trace;
  bool snf_consistent = true;
};

struct VerifyOptions {
  bool strict = false;
};

namespace detail {

inline std::optional<std::string> check_leaf(const Certificate& cert) {
  const Leaf& leaf = cert.leaf;
  if (leaf.citation != leaf_citation(leaf.kind)) {
    return "citation does not match leaf kind " +
           std::string(leaf_name(leaf.kind));
  }
  if (leaf.kind == LeafKind::kFree) {
    if (cert.final.relator_count() != 0) {
      return "free leaf with " + std::to_string(cert.final.relator_count()) +
             " relators";
    }
    return std::nullopt;
  }
  if (leaf.kind == LeafKind::kOneRelator && leaf.m != 2) {
    return "one-relator leaf needs m = 2, got " + std::to_string(leaf.m);
  }
  if (leaf.m < 2) return "leaf chain size below 2";
  for (const Letter& l : leaf.conjugator) {
    if (l.gen.base_index() < 1 || l.gen.base_index() > leaf.m) {
      return "leaf conjugator uses " + l.gen.name() + " outside x1..x" +
             std::to_string(leaf.m);
    }
  }
  if (!(cert.final == chain_presentation(leaf.m, leaf.conjugator))) {
    return "final presentation is not the chain presentation of the leaf";
  }
  if (leaf.kind == LeafKind::kC1) {
    // Brute force over all split positions rather than trusting decompose.
    const Word& u = leaf.conjugator;
    for (std::size_t k = 0; k <= u.size(); ++k) {
      bool prefix_ok = true, suffix_ok = true;
      for (std::size_t p = 0; p < k; ++p) {
        prefix_ok = prefix_ok && u[p].gen.base_index() != 1;
      }
      for (std::size_t p = k; p < u.size(); ++p) {
        suffix_ok = suffix_ok && u[p].gen.base_index() != leaf.m;
      }
      if (prefix_ok && suffix_ok) {
        return "leaf conjugator decomposes at position " + std::to_string(k);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<AbelianInvariants> safe_invariants(const Presentation& p) {
  try {
    return abelian_invariants(p);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline VerificationReport verify_impl(const Certificate& cert,
                                      VerifyOptions opts) {
  VerificationReport report;
  auto reject = [&](std::string location, std::string message) {
    report.accepted = false;
    report.location = std::move(location);
    report.message = std::move(message);
    return report;
  };

  if (cert.version != kCertificateVersion) {
    return reject("/version", "unsupported certificate version '" +
                                  cert.version + "'");
  }
  report.snf_trace.push_back({"initial", safe_invariants(cert.initial)});

  Presentation p = cert.initial;
  std::size_t step = 0;
  for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
    const Round& round = cert.rounds[r];
    for (std::size_t s = 0; s < round.stages.size(); ++s) {
      const Stage& stage = round.stages[s];
      for (std::size_t k = 0; k < stage.moves.size(); ++k, ++step) {
        try {
          p = lotac::apply(p, stage.moves[k]);
        } catch (const Error& e) {
          report.failing_step = step;
          return reject("/rounds/" + std::to_string(r) + "/stages/" +
                            std::to_string(s) + "/moves/" + std::to_string(k) +
                            " (step " + std::to_string(step) + ", stage " +
                            stage.name + ")",
                        e.what());
        }
      }
    }
    report.snf_trace.push_back(
        {"after round " + std::to_string(r) + " (" + round.kind + ")",
         safe_invariants(p)});
  }

  if (!(p == cert.final)) {
    return reject("/final",
                  "replayed presentation differs from the declared final one");
  }
  if (auto why = check_leaf(cert)) return reject("/leaf", *why);

  for (const auto& point : report.snf_trace) {
    if (point.invariants != report.snf_trace.front().invariants) {
      report.snf_consistent = false;
    }
  }
  if (opts.strict && !report.snf_consistent) {
    return reject("snf", "abelian invariants changed between round boundaries");
  }
  report.accepted = true;
  return report;
}

}  // namespace detail

// Never throws; every failure lands in the report.
inline VerificationReport verify(const Certificate& cert,
                                 VerifyOptions opts = {}) noexcept {
  try {
    return detail::verify_impl(cert, opts);
  } catch (const std::exception& e) {
    VerificationReport report;
    report.location = "internal";
    report.message = e.what();
    return report;
  }
}

inline std::string format_report(const VerificationReport& report) {
  std::string out = report.accepted ? "accepted\n" : "rejected\n";
  if (!report.accepted) {
    if (report.failing_step) {
      out += "failing step: " + std::to_string(*report.failing_step) + "\n";
    }
    out += "location: " + report.location + "\n";
    out += "reason: " + report.message + "\n";
  }
  for (const auto& point : report.snf_trace) {
    out += "abelianization " + point.label + ": " +
           (point.invariants ? format_invariants(*point.invariants)
                             : std::string("overflow")) +
           "\n";
  }
  out += std::string("abelianization consistent: ") +
         (report.snf_consistent ? "yes" : "no") + "\n";
  return out;
}

}  // namespace lotac
