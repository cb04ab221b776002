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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypk/assembly.hpp"
#include "hypk/coxeter.hpp"
#include "hypk/geodesics.hpp"
#include "hypk/kvalue.hpp"

namespace hypk {

/// One group of the catalog with its expected stabilizers, cusps and lower
/// K-groups. Stabilizers and cusps are multisets of rendered strings kept in
/// file order; `expected_cusps` is empty-optional when the table has no column.
struct CatalogEntry {
  std::string name;
  CoxeterMatrix matrix;
  int ideal_vertices = 0;
  std::vector<std::string> expected_stabilizers;
  std::optional<std::vector<std::string>> expected_cusps;
  KValue expected_km1;
  KValue expected_k0t;
  KValue expected_wh;
};

/// Worked example with the nonzero E2 terms in degrees -1, 0, 1.
struct WorkedExample {
  std::string name;
  KValue e2_km1;
  KValue e2_k0;
  KValue e2_wh;
  KValue km1;
  KValue k0t;
  KValue wh;
};

/// Raw text of the embedded data files.
std::string_view golden_tables_text();
std::string_view golden_examples_text();

/// Parses the line format `name | stabilizers | cusps | Km1 | K0t | Wh`.
std::vector<CatalogEntry> parse_golden_tables(std::string_view text);
std::vector<WorkedExample> parse_golden_examples(std::string_view text);

/// Inverse of the parser for one entry (multiplicities as "(twice)" etc.).
std::string format_golden_line(const CatalogEntry& e);

/// Splits "a, b (twice)" into the sorted multiset {a, b, b}; "-" is empty.
std::vector<std::string> parse_multiset(std::string_view field);
std::string format_multiset(const std::vector<std::string>& items);

/// The 32 groups, cocompact first.
const std::vector<CatalogEntry>& catalog();
const std::vector<WorkedExample>& worked_examples();

/// Throws UnknownName.
const CatalogEntry& lookup(std::string_view name);

struct EntryReport {
  std::string name;
  bool pass = false;
  std::string first_mismatch;  // empty on pass
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  int passed = 0;
  int total = 0;
  bool all_passed() const noexcept { return passed == total; }
};

/// Recomputes every selected entry and compares it with the expectations.
/// Errors raised by the pipeline are reported as failures. An empty `names`
/// selects the whole catalog; `subset_only` with no names checks nothing.
struct VerifyOptions {
  int threads = 1;
  const EdgeBehaviorTable* table = nullptr;  // standard table when null
  std::vector<std::string> names;
  bool subset_only = false;
};

VerifyReport verify_all(const VerifyOptions& options = {});

/// Compares one entry; empty string on agreement.
std::string diff_entry(const CatalogEntry& e, const EdgeBehaviorTable& table);

std::string render_cusp_list(const std::vector<CuspType>& cusps);

}  // namespace hypk
