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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hypk {

// ---------------------------------------------------------------------------
// Finite group isomorphism types
// ---------------------------------------------------------------------------

/// Isomorphism type of a finite cell stabilizer. Dihedral(n) has order 2n.
class FiniteGroupType {
 public:
  enum class Kind : std::uint8_t {
    Trivial,
    C2,
    Dihedral,
    C2xDihedral,
    ElemAbelian2,
    S4,
    C2xS4,
    A5,
    C2xA5,
  };

  static FiniteGroupType trivial() { return {Kind::Trivial, 0}; }
  static FiniteGroupType c2() { return {Kind::C2, 0}; }
  static FiniteGroupType dihedral(int n);
  static FiniteGroupType c2_dihedral(int n);
  static FiniteGroupType elem_abelian2(int k);
  static FiniteGroupType s4() { return {Kind::S4, 0}; }
  static FiniteGroupType c2_s4() { return {Kind::C2xS4, 0}; }
  static FiniteGroupType a5() { return {Kind::A5, 0}; }
  static FiniteGroupType c2_a5() { return {Kind::C2xA5, 0}; }

  /// Accepts "D5", "D_5", "C2xD6", "Z/2 x D_6", "E2^3", "S4", "C2xA5", ...
  static FiniteGroupType parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// n for (C2x)Dihedral(n), k for ElemAbelian2(k), 0 otherwise.
  int param() const noexcept { return param_; }

  /// C2 x D_n with n odd is D_2n, (Z/2)^2 is D_2, (Z/2)^3 is C2 x D_2,
  /// D_1 and (Z/2)^1 are C2.
  FiniteGroupType canonical() const;
  std::uint64_t order() const;

  /// Short ASCII name of the canonical form, e.g. "D_10", "C2xD_6", "C2xA5".
  std::string name() const;

  friend bool operator==(const FiniteGroupType&, const FiniteGroupType&) = default;
  friend auto operator<=>(const FiniteGroupType&, const FiniteGroupType&) = default;

 private:
  FiniteGroupType(Kind k, int p) : kind_(k), param_(p) {}
  Kind kind_;
  int param_;
};

/// Two-dimensional crystallographic stabilizers of ideal vertices.
enum class CuspType : std::uint8_t { Tri36, Square44, Tri333 };

std::string_view cusp_name(CuspType c) noexcept;  // "[3,6]", "[4,4]", "[3^[3]]"

// ---------------------------------------------------------------------------
// Coxeter matrices and diagrams
// ---------------------------------------------------------------------------

/// Symmetric matrix of Coxeter labels; 1 on the diagonal, off-diagonal labels
/// are integers >= 2 (infinite labels are not supported).
class CoxeterMatrix {
 public:
  /// Validates symmetry, unit diagonal and labels >= 2.
  /// Throws MalformedNotation for bad labels and AsymmetricMatrix otherwise.
  CoxeterMatrix(int rank, std::vector<int> entries);

  /// Path 0-1-2-3 with labels p, q, r; non-adjacent pairs get 2.
  static CoxeterMatrix chain(int p, int q, int r);
  /// Cycle 0-1-2-3-0 with labels m01=a, m12=b, m23=c, m03=d.
  static CoxeterMatrix cycle(int a, int b, int c, int d);

  int rank() const noexcept { return rank_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  /// Restriction to `subset`, in subset order.
  CoxeterMatrix restrict_to(const std::vector<int>& subset) const;

  /// Raw-matrix literal: "rank N" then N rows of labels.
  std::string to_literal() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_;
  std::vector<int> entries_;
};

struct CoxeterDiagram {
  std::optional<std::string> name;
  CoxeterMatrix matrix;
};

struct SpecialSubgroup {
  std::vector<int> generators;
  CoxeterMatrix submatrix;
};

struct SubgroupClassification {
  std::variant<FiniteGroupType, CuspType> kind;

  bool spherical() const noexcept { return std::holds_alternative<FiniteGroupType>(kind); }
  const FiniteGroupType& finite() const { return std::get<FiniteGroupType>(kind); }
  CuspType cusp() const { return std::get<CuspType>(kind); }
  std::string describe() const;
};

/// Per simplex vertex classification. Vertex v is the special subgroup that
/// omits generator v.
struct VertexProfile {
  std::array<SubgroupClassification, 4> vertices;
  int ideal_count = 0;

  bool ideal(int v) const { return !vertices[static_cast<std::size_t>(v)].spherical(); }
};

/// Registry names (ASCII form, e.g. "[5,3^{1,1}]", "[(3,4)^[2]]").
/// The nine cocompact groups come first, in figure order.
const std::vector<std::string>& registry_names();

/// Maps LaTeX-flavoured spellings onto registry names: strips whitespace,
/// rewrites "^{[..]}" to "^[..]", "×" and "\times" to "x".
std::string normalize_name(std::string_view text);

/// Registry lookup on the normalized name; nullopt if absent.
std::optional<CoxeterMatrix> registry_matrix(std::string_view name);

/// Parses a registry name, generic chain "[p,q,r]", generic cycle
/// "[(p,q,r,s)]" or a raw-matrix literal.
CoxeterDiagram parse_diagram(std::string_view text);

/// Reads a raw-matrix literal file.
CoxeterDiagram read_diagram_file(const std::string& path);

/// All C(rank, k) special subgroups, subsets in lexicographic order.
std::vector<SpecialSubgroup> special_subgroups(const CoxeterDiagram& diagram, int k);

/// Label-multiset lookup for rank-3 special subgroups.
SubgroupClassification classify_rank3(const SpecialSubgroup& sub);
SubgroupClassification classify_rank3(int a, int b, int c);

/// Dihedral type of a rank-2 special subgroup.
FiniteGroupType classify_rank2(const SpecialSubgroup& sub);

VertexProfile vertex_profile(const CoxeterDiagram& diagram);

enum class GramSign { PositiveDefinite, Semidefinite, Indefinite };

struct GramReport {
  GramSign sign;
  int zero_eigenvalues = 0;
  std::vector<double> eigenvalues;  // ascending
};

inline constexpr double kGramTolerance = 1e-9;

/// Signs of the eigenvalues of the cosine matrix (1 on the diagonal,
/// -cos(pi/m) off it). For rank-3 subgroups whose labels classify, throws
/// ToleranceAmbiguity when a spherical subgroup has a near-zero eigenvalue.
GramReport gram_check(const SpecialSubgroup& sub);

}  // namespace hypk
