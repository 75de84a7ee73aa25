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

// Free-group words over named generators.
//
// A Word is always stored freely reduced. Base generators of a chain are
// named x1, x2, ...; auxiliary stabilization letters are z1, z2, ...; letters
// introduced when splitting power relations are x<i>_<j>.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lotac/error.hpp"

namespace lotac {

class GeneratorId {
 public:
  explicit GeneratorId(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "invalid generator name '" + name_ + "'");
    }
    index_ = parse_base_index(name_);
  }

  static GeneratorId base(int i) {
    if (i < 1) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "base index " + std::to_string(i) + " < 1");
    }
    return GeneratorId("x" + std::to_string(i));
  }
  static GeneratorId auxiliary(int n) {
    return GeneratorId("z" + std::to_string(n));
  }
  static GeneratorId intermediate(int i, int j) {
    return GeneratorId("x" + std::to_string(i) + "_" + std::to_string(j));
  }

  static bool valid_name(std::string_view s) {
    if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  const std::string& name() const noexcept { return name_; }
  // Index i of a base generator "x<i>", or 0 for any other name.
  int base_index() const noexcept { return index_; }
  bool is_base() const noexcept { return index_ > 0; }

  bool operator==(const GeneratorId& other) const noexcept {
    return name_ == other.name_;
  }

  // Natural order: digit runs compare numerically, so x2 < x10 and
  // x1 < x1_1 < x2 < z1.
  std::strong_ordering operator<=>(const GeneratorId& other) const noexcept {
    return natural_compare(name_, other.name_);
  }

  static std::strong_ordering natural_compare(std::string_view a,
                                              std::string_view b) noexcept {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
      bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
      if (da && db) {
        std::size_t ie = i, je = j;
        while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
          ++ie;
        while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
          ++je;
        std::string_view ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
        while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
        while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
        if (ra.size() != rb.size()) return ra.size() <=> rb.size();
        if (auto c = ra.compare(rb); c != 0) {
          return c < 0 ? std::strong_ordering::less
                       : std::strong_ordering::greater;
        }
        i = ie;
        j = je;
        continue;
      }
      if (a[i] != b[j]) {
        return static_cast<unsigned char>(a[i]) <=>
               static_cast<unsigned char>(b[j]);
      }
      ++i;
      ++j;
    }
    if (auto c = (a.size() - i) <=> (b.size() - j); c != 0) return c;
    // Equal under natural order (e.g. x01 vs x1): fall back to bytes.
    int c = a.compare(b);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  static int parse_base_index(std::string_view s) {
    if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return 0;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return 0;
    return value;
  }

  std::string name_;
  int index_ = 0;
};

struct Letter {
  GeneratorId gen;
  int sign;

  Letter(GeneratorId g, int s) : gen(std::move(g)), sign(s) {
    if (s != 1 && s != -1) {
      throw Error(ErrorKind::kInvalidArgument, "letter sign must be +1 or -1");
    }
  }

  Letter inverse() const { return Letter(gen, -sign); }
  bool cancels(const Letter& other) const noexcept {
    return sign == -other.sign && gen == other.gen;
  }
  bool operator==(const Letter&) const = default;
};

inline Letter base_letter(int i, int sign = 1) {
  return Letter(GeneratorId::base(i), sign);
}

class Word;
Word free_reduce(std::span<const Letter> raw);

// Freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool operator==(const Word&) const = default;

 private:
  friend Word free_reduce(std::span<const Letter> raw);
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

// Stack-based free reduction; the result is the unique reduced form.
inline Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

inline Word free_reduce(std::initializer_list<Letter> raw) {
  return free_reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  return free_reduce(raw);
}

template <typename... Ws>
Word concat(const Word& a, const Word& b, const Ws&... rest) {
  return concat(concat(a, b), rest...);
}

inline Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return free_reduce(raw);
}

// c w c^-1
inline Word conjugate(const Word& w, const Word& c) {
  return concat(c, w, invert(c));
}

inline Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : invert(w);
  Word out;
  for (int n = 0; n < (k >= 0 ? k : -k); ++n) out = concat(out, base);
  return out;
}

inline Word letter_word(const Letter& l) { return free_reduce({l}); }
inline Word letter_word(const GeneratorId& g, int sign = 1) {
  return free_reduce({Letter(g, sign)});
}

// Replaces x_i^e by x_{i+1}^e. Defined on words in x_1..x_{m-1}.
inline Word alpha_shift(const Word& w, int m) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (const Letter& l : w) {
    int i = l.gen.base_index();
    if (i < 1 || i > m - 1) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "alpha_shift: letter " + l.gen.name() +
                      " is not among x1..x" + std::to_string(m - 1));
    }
    raw.emplace_back(GeneratorId::base(i + 1), l.sign);
  }
  return free_reduce(raw);
}

// Replaces x_i by x_{i+delta}.
inline Word reindex(const Word& w, int delta) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (const Letter& l : w) {
    int i = l.gen.base_index();
    if (i < 1) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "reindex: " + l.gen.name() + " is not a base generator");
    }
    if (i + delta < 1) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "reindex: " + l.gen.name() + " shifted below x1");
    }
    raw.emplace_back(GeneratorId::base(i + delta), l.sign);
  }
  return free_reduce(raw);
}

inline std::set<GeneratorId> support(const Word& w) {
  std::set<GeneratorId> out;
  for (const Letter& l : w) out.insert(l.gen);
  return out;
}

inline bool occurs(const Word& w, const GeneratorId& g) {
  return std::any_of(w.begin(), w.end(),
                     [&](const Letter& l) { return l.gen == g; });
}

inline std::size_t occurrences(const Word& w, const GeneratorId& g) {
  return static_cast<std::size_t>(std::count_if(
      w.begin(), w.end(), [&](const Letter& l) { return l.gen == g; }));
}

// Subword w[from, to).
inline Word slice(const Word& w, std::size_t from, std::size_t to) {
  return free_reduce(std::span<const Letter>(w.letters()).subspan(from, to - from));
}

// U = U2 U1 with U1 free of x_m and U2 free of x_1.
struct Split {
  Word u2;
  Word u1;
  std::size_t split_index = 0;

  bool operator==(const Split&) const = default;
};

inline void require_chain_word(const Word& u, int m, const char* where) {
  for (const Letter& l : u) {
    int i = l.gen.base_index();
    if (i < 1 || i > m) {
      throw Error(ErrorKind::kForeignGenerator,
                  std::string(where) + ": letter " + l.gen.name() +
                      " is not among x1..x" + std::to_string(m));
    }
  }
}

// Smallest split position: one past the last occurrence of x_m. The split
// exists iff no x_1 occurs before that point.
inline std::optional<Split> decompose(const Word& u, int m) {
  if (m < 2) {
    throw Error(ErrorKind::kInvalidArgument, "decompose: m must be >= 2");
  }
  require_chain_word(u, m, "decompose");
  std::size_t k = 0;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].gen.base_index() == m) k = p + 1;
  }
  for (std::size_t p = 0; p < k; ++p) {
    if (u[p].gen.base_index() == 1) return std::nullopt;
  }
  return Split{slice(u, 0, k), slice(u, k, u.size()), k};
}

// Text form: space-separated terms, inverses as "^-1", identity as "1".
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen.name();
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  constexpr long kMaxExponent = 1'000'000;
  constexpr std::size_t kMaxLetters = 4'000'000;
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };

  skip_space();
  if (pos == text.size()) return Word();
  if (text[pos] == '1') {
    std::size_t at = pos++;
    skip_space();
    if (pos != text.size()) {
      throw SyntaxError(at, "identity '1' must stand alone");
    }
    return Word();
  }

  std::vector<Letter> raw;
  bool need_term = true;
  while (true) {
    skip_space();
    if (pos == text.size()) {
      if (need_term) throw SyntaxError(pos, "expected a generator");
      break;
    }
    if (!need_term && text[pos] == '*') {
      ++pos;
      need_term = true;
      continue;
    }
    char c = text[pos];
    if (c < 'a' || c > 'z') {
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
    std::size_t start = pos;
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    GeneratorId gen{std::string(text.substr(start, pos - start))};
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t num_start = pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      std::size_t digits_start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == digits_start) {
        throw SyntaxError(num_start, "expected an integer exponent");
      }
      long value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + digits_start, text.data() + pos, value);
      if (ec != std::errc() || value > kMaxExponent) {
        throw SyntaxError(digits_start, "exponent out of range");
      }
      (void)ptr;
      exponent = negative ? -value : value;
    }
    const long count = exponent < 0 ? -exponent : exponent;
    if (raw.size() + static_cast<std::size_t>(count) > kMaxLetters) {
      throw SyntaxError(start, "word expands to more than " +
                                   std::to_string(kMaxLetters) + " letters");
    }
    int sign = exponent < 0 ? -1 : 1;
    for (long n = 0; n < count; ++n) {
      raw.emplace_back(gen, sign);
    }
    need_term = false;
    if (pos < text.size() && !is_space(text[pos]) && text[pos] != '*') {
      throw SyntaxError(pos, std::string("unexpected character '") +
                                 text[pos] + "'");
    }
  }
  return free_reduce(raw);
}

}  // namespace lotac
