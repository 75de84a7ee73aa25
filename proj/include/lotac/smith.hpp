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

// Dense integer matrices and their Smith invariant factors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lotac/error.hpp"

namespace lotac {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in Smith elimination");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in Smith elimination");
  }
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in Smith elimination");
  }
  return out;
}

inline std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) {
    throw Error(ErrorKind::kOverflow, "integer overflow in Smith elimination");
  }
  return v < 0 ? -v : v;
}

}  // namespace detail

// Nonzero invariant factors d1 | d2 | ... of `m`, units included. The
// abelian group presented by the rows is Z^(cols - rank) + sum Z/d_i.
// Throws Error(kOverflow) rather than wrapping.
inline std::vector<std::int64_t> smith_invariant_factors(IntMatrix m) {
  using detail::abs64;
  using detail::checked_mul;
  using detail::checked_sub;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c) != 0 &&
            (!found || abs64(m(r, c)) < abs64(m(pr, pc)))) {
          found = true;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

    while (true) {
      // Euclid down column t: the smallest remainder becomes the pivot.
      while (true) {
        std::size_t best = t;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (m(r, t) != 0 && abs64(m(r, t)) < abs64(m(best, t))) best = r;
        }
        if (best != t) {
          for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(best, c));
        }
        bool clear = true;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (m(r, t) == 0) continue;
          std::int64_t q = m(r, t) / m(t, t);
          for (std::size_t c = t; c < cols; ++c) {
            m(r, c) = checked_sub(m(r, c), checked_mul(q, m(t, c)));
          }
          clear = clear && m(r, t) == 0;
        }
        if (clear) break;
      }
      // Same along row t. Column t is zero below the pivot, so these column
      // operations only touch row t.
      bool row_clear = true;
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        m(t, c) = m(t, c) % m(t, t);
        row_clear = row_clear && m(t, c) == 0;
      }
      if (!row_clear) {
        std::size_t best = t;
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(t, c) != 0 && abs64(m(t, c)) < abs64(m(t, best))) best = c;
        }
        for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, best));
        continue;
      }
      // The pivot must divide the whole trailing block; otherwise fold a
      // row containing an offending entry into row t and repeat.
      std::int64_t p = m(t, t);
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % p != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) {
        m(t, c) = detail::checked_add(m(t, c), m(bad_row, c));
      }
    }
    diag.push_back(abs64(m(t, t)));
  }
  return diag;
}

}  // namespace lotac
