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

#include <string>
#include <vector>

#include "hypk/assembly.hpp"
#include "hypk/catalog.hpp"
#include "hypk/coxeter.hpp"

namespace hypk {

enum class OutputFormat { Text, Json, Csv };

/// K-groups of one group. Text form: "Wh = ...; K0t = ...; Km1 = ...; K<=-2 = 0".
std::string format_kgroups(const std::string& group, const KGroups& k, OutputFormat fmt, bool normalized);

/// Type I stabilizers (rendering and canonical tag, one per line) and cusps.
std::string format_stabilizers(const CoxeterDiagram& diagram, OutputFormat fmt);

/// Rank data of a finite group as JSON.
std::string format_oracle(const FiniteGroupType& t);

std::string format_verify(const VerifyReport& report);

/// Tables 1 to 7; expected values by default, recomputed ones on request.
std::string format_table(int which, bool recomputed);

/// The catalog names grouped by number of ideal vertices.
std::string format_list();

std::string display_name(const CoxeterDiagram& d);

}  // namespace hypk
