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

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 unsupported input, 3 verification failure.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lotac/pipeline.hpp"
#include "lotac/serialize.hpp"
#include "lotac/verify.hpp"

namespace lotac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitRejected = 3;

// Uniform freely reduced word of length exactly `length` over x1..xm.
template <typename Rng>
Word random_word(Rng& rng, int m, std::size_t length) {
  std::uniform_int_distribution<int> gen(1, m), sign(0, 1);
  std::vector<Letter> raw;
  while (raw.size() < length) {
    Letter l = base_letter(gen(rng), sign(rng) ? 1 : -1);
    if (!raw.empty() && raw.back().cancels(l)) continue;
    raw.push_back(l);
  }
  return free_reduce(raw);
}

namespace detail {

inline std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorKind::kSyntax, "bad exponent '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

inline bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

inline int emit_certificate(const Certificate& cert, const std::string& out_path,
                            std::ostream& out, std::ostream& err) {
  std::string text = serialize(cert);
  std::ostream& summary = out_path.empty() ? err : out;
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  auto reduce_rounds = std::count_if(
      cert.rounds.begin(), cert.rounds.end(),
      [](const Round& r) { return r.kind == "reduce"; });
  summary << "rounds: " << reduce_rounds
          << "; leaf: " << leaf_name(cert.leaf.kind) << "\n";
  return kExitOk;
}

}  // namespace detail

// Runs one invocation; args exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Certified asphericity reductions for LOT chain presentations",
               "lotac"};
  app.require_subcommand(1);

  int m = 0;
  std::string word_text, out_path, cert_path, exponents_text;
  bool strict = false;
  std::size_t max_len = 6, count = 100;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "decomposability of U");
  analyze->add_option("--m", m, "chain size")->required();
  analyze->add_option("--word", word_text, "conjugating word U")->required();

  auto* certify_cmd = app.add_subcommand("certify", "build a certificate");
  certify_cmd->add_option("--m", m, "chain size")->required();
  certify_cmd->add_option("--word", word_text, "conjugating word U")->required();
  certify_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("--cert", cert_path, "certificate file")->required();
  verify_cmd->add_flag("--strict", strict, "abelian invariants are gating");

  auto* corollary = app.add_subcommand("corollary", "power-chain certificate");
  corollary->add_option("--m", m, "chain size")->required();
  corollary->add_option("--word", word_text, "conjugating word U")->required();
  corollary->add_option("--exponents", exponents_text, "k1,k2,...")->required();
  corollary->add_option("--out", out_path, "output file (default stdout)");

  auto* snf = app.add_subcommand("snf", "abelian invariants along a certificate");
  snf->add_option("--cert", cert_path, "certificate file")->required();

  auto* random = app.add_subcommand("random", "certify and verify random words");
  random->add_option("--m", m, "chain size")->required();
  random->add_option("--max-len", max_len, "maximum word length");
  random->add_option("--count", count, "number of words");
  random->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto load = [&](Certificate& cert) -> int {
    std::string text;
    if (!detail::read_file(cert_path, text)) {
      err << "error: cannot read " << cert_path << "\n";
      return kExitUsage;
    }
    try {
      cert = deserialize(text);
    } catch (const SchemaError& e) {
      out << "rejected\nlocation: " << e.location() << "\nreason: " << e.what()
          << "\n";
      return kExitRejected;
    }
    return kExitOk;
  };

  try {
    if (*analyze) {
      Word u = parse_word(word_text);
      LotSpec spec(m, u);
      out << "m: " << m << "\nword: " << format_word(u) << "\n";
      auto split = decompose(u, m);
      if (split) {
        out << "decomposable: yes; split k=" << split->split_index
            << ": U2 = " << format_word(split->u2)
            << ", U1 = " << format_word(split->u1) << "\n";
        out << "reduced conjugator: "
            << format_word(reduced_conjugator(*split, m)) << "\n";
      } else {
        out << "decomposable: no; (C1) applies\n";
      }
      if (m == 2) out << "base case: one-relator (m = 2)\n";
      return kExitOk;
    }
    if (*certify_cmd) {
      Certificate cert = certify(LotSpec(m, parse_word(word_text)));
      return detail::emit_certificate(cert, out_path, out, err);
    }
    if (*corollary) {
      CorollarySpec spec(m, parse_word(word_text),
                         detail::parse_exponents(exponents_text));
      Certificate cert = certify_corollary(spec);
      return detail::emit_certificate(cert, out_path, out, err);
    }
    if (*verify_cmd) {
      Certificate cert;
      if (int code = load(cert); code != kExitOk) return code;
      auto report = verify(cert, VerifyOptions{strict});
      out << format_report(report);
      return report.accepted ? kExitOk : kExitRejected;
    }
    if (*snf) {
      Certificate cert;
      if (int code = load(cert); code != kExitOk) return code;
      Presentation p = cert.initial;
      out << "initial: " << format_invariants(abelian_invariants(p)) << "\n";
      for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
        for (const auto& stage : cert.rounds[r].stages) {
          for (const auto& mv : stage.moves) p = lotac::apply(p, mv);
          auto inv = smith_invariant_factors(abelian_matrix(p));
          out << "round " << r << " " << stage.name << ": "
              << format_invariants(abelian_invariants(p)) << " (factors";
          for (auto d : inv) out << ' ' << d;
          out << ")\n";
        }
      }
      return kExitOk;
    }
    if (*random) {
      if (m < 2) throw Error(ErrorKind::kInvalidArgument, "m must be >= 2");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      for (std::size_t n = 0; n < count; ++n) {
        Word u = random_word(rng, m, len(rng));
        Certificate cert = deserialize(serialize(certify(LotSpec(m, u))));
        auto report = verify(cert);
        if (!report.accepted) {
          err << "rejected certificate for U = " << format_word(u) << "\n"
              << format_report(report);
          return kExitRejected;
        }
      }
      out << "verified " << count << " random certificates (m = " << m << ")\n";
      return kExitOk;
    }
  } catch (const MoveError& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kNegativeExponent ? kExitUnsupported
                                                    : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lotac
