// Copyright 2026 The onetour Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONETOUR_CHECKED_HPP
#define ONETOUR_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace onetour {

/// Exact count type used for all combinatorial results.
using Count = std::uint64_t;

/// Thrown when an input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("onetour: unsigned count overflow in multiplication");
  }
  return r;
}

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("onetour: unsigned count overflow in addition");
  }
  return r;
}

inline std::int64_t narrow_i128(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("onetour: determinant entry exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline Count factorial(unsigned k) {
  Count r = 1;
  for (unsigned i = 2; i <= k; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace detail
}  // namespace onetour

#endif  // ONETOUR_CHECKED_HPP
