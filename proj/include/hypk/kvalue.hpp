/*
 * Copyright 2026 The hypk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypk {

// A formal lower K-theory value: Z^free plus finite cyclic summands plus
// opaque symbols. `inf_z2` counts copies of the countable sum of Z/2; `nil0`
// and `nil1` count copies of NK_0(Z D_4) and NK_1(Z D_4).
struct KValue {
  std::uint64_t free_rank = 0;
  std::vector<std::uint64_t> torsion;  // cyclic orders >= 2, kept sorted
  std::uint64_t inf_z2 = 0;
  std::uint64_t nil0 = 0;
  std::uint64_t nil1 = 0;

  static KValue zero() { return {}; }
  static KValue free(std::uint64_t rank);
  static KValue cyclic(std::uint64_t order, std::uint64_t copies = 1);
  static KValue inf_z2_sum(std::uint64_t copies = 1);
  static KValue nil0_sym(std::uint64_t copies = 1);
  static KValue nil1_sym(std::uint64_t copies = 1);

  bool is_zero() const noexcept;
  std::uint64_t torsion_count(std::uint64_t order) const noexcept;

  // Symbol multiplicities collapsed to at most one copy each.
  KValue normalized() const;

  // "Z^3 + (Z/4)^2 + infZ2 + Nil0" or "0". Exact mode keeps symbol
  // multiplicities as "(infZ2)^2".
  std::string render(bool normalize = true) const;

  // Inverse of render; accepts both modes.
  static KValue parse(std::string_view text);

  KValue& operator+=(const KValue& other);
  friend KValue operator+(KValue a, const KValue& b) { return a += b; }
  friend bool operator==(const KValue&, const KValue&) = default;
};

}  // namespace hypk
