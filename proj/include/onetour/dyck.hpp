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

#ifndef ONETOUR_DYCK_HPP
#define ONETOUR_DYCK_HPP

#include <vector>

namespace onetour {

/// Unlabeled balanced word: true = open, false = close.
using DyckWord = std::vector<bool>;

/// Calls fn(word) for every balanced word with n opens, in lexicographic order
/// with open < close reversed (all-open prefix first).
template <typename Fn>
void for_each_dyck_word(int n, Fn&& fn) {
  DyckWord word;
  word.reserve(static_cast<std::size_t>(2 * n));
  auto rec = [&](auto&& self, int opens, int closes) -> void {
    if (closes == n) {
      fn(static_cast<const DyckWord&>(word));
      return;
    }
    if (opens < n) {
      word.push_back(true);
      self(self, opens + 1, closes);
      word.pop_back();
    }
    if (closes < opens) {
      word.push_back(false);
      self(self, opens, closes + 1);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
}

inline bool is_dyck_word(const DyckWord& word) {
  int depth = 0;
  for (bool open : word) {
    depth += open ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace onetour

#endif  // ONETOUR_DYCK_HPP
