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
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <doctest.h>

#include "hypk/coxeter.hpp"
#include "hypk/error.hpp"

using namespace hypk;

namespace {

std::multiset<int> labels(const SpecialSubgroup& s) {
  std::multiset<int> out;
  const auto& m = s.submatrix;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) out.insert(m(i, j));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Determinant of the 3x3 cosine matrix, written out by hand:
// det = 1 - a^2 - b^2 - c^2 - 2abc with a, b, c = cos(pi/m).
double cosine_det(int p, int q, int r) {
  const double a = std::cos(std::numbers::pi / p);
  const double b = std::cos(std::numbers::pi / q);
  const double c = std::cos(std::numbers::pi / r);
  return 1 - a * a - b * b - c * c - 2 * a * b * c;
}

// Ideal-vertex membership as listed in the subsection headings.
const std::map<int, std::set<std::string>>& membership() {
  static const std::map<int, std::set<std::string>> m{
      {0,
       {"[3,5,3]", "[5,3,5]", "[(3^3,4)]", "[5,3^{1,1}]", "[4,3,5]", "[(3^3,5)]", "[(3,5)^[2]]",
        "[(3,4)^[2]]", "[(3,4,3,5)]"}},
      {1,
       {"[3,3^[3]]", "[3,3,6]", "[5,3^[3]]", "[5,3,6]", "[(3^2,4^2)]", "[4,3^[3]]", "[3,4,4]",
        "[3,4^{1,1}]", "[4,3,6]"}},
      {2,
       {"[(3,5,3,6)]", "[(3,4^3)]", "[(3,4,3,6)]", "[(3^3,6)]", "[3^[3,3]]", "[6,3^{1,1}]", "[3,6,3]",
        "[6,3,6]", "[4,4,4]"}},
      {3, {"[6,3^[3]]", "[4^{1,1,1}]"}},
      {4, {"[3^[]x[]]", "[4^[4]]", "[(3,6)^[2]]"}},
  };
  return m;
}

}  // namespace

TEST_CASE("chain and cycle notation") {
  const auto d = parse_diagram("[5,3,5]");
  const auto& m = d.matrix;
  CHECK(m(0, 1) == 5);
  CHECK(m(1, 2) == 3);
  CHECK(m(2, 3) == 5);
  CHECK(m(0, 2) == 2);
  CHECK(m(0, 3) == 2);
  CHECK(m(1, 3) == 2);

  const auto c = parse_diagram("[(3,4,3,5)]").matrix;
  CHECK(c(0, 1) == 3);
  CHECK(c(1, 2) == 4);
  CHECK(c(2, 3) == 3);
  CHECK(c(0, 3) == 5);
  CHECK(c(0, 2) == 2);
  CHECK(c(1, 3) == 2);

  const auto r = parse_diagram("[2,2,2]").matrix;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(r(i, j) == (i == j ? 1 : 2));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_diagram("[bogus]"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { parse_diagram(""); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { parse_diagram("[1,3,5]"); }) == ErrorCode::MalformedNotation);
  CHECK(code_of([] { parse_diagram("[3,5]"); }) == ErrorCode::MalformedNotation);
  CHECK(code_of([] { parse_diagram("rank 4\n1 3 2 2\n2 1 3 2\n2 3 1 3\n2 2 3 1\n"); }) ==
        ErrorCode::AsymmetricMatrix);
  CHECK(code_of([] { parse_diagram("rank 4\n2 3 2 2\n3 1 3 2\n2 3 1 3\n2 2 3 1\n"); }) ==
        ErrorCode::AsymmetricMatrix);
}

TEST_CASE("raw matrix literal round-trips") {
  const auto d = parse_diagram("rank 4\n1 3 2 2\n3 1 5 2\n2 5 1 3\n2 2 3 1\n");
  CHECK(d.matrix == CoxeterMatrix::chain(3, 5, 3));
  CHECK(parse_diagram(d.matrix.to_literal()).matrix == d.matrix);
}

TEST_CASE("registry names round-trip through the matrix literal") {
  REQUIRE(registry_names().size() == 32);
  for (const auto& name : registry_names()) {
    CAPTURE(name);
    const auto d = parse_diagram(name);
    REQUIRE(d.name);
    CHECK(*d.name == name);
    const auto again = parse_diagram(d.matrix.to_literal());
    CHECK(again.matrix == d.matrix);
  }
}

TEST_CASE("TeX spellings normalize to registry names") {
  CHECK(parse_diagram("[(3,5)^{[2]}]").name == std::optional<std::string>("[(3,5)^[2]]"));
  CHECK(parse_diagram("[3^{[\\hskip2pt]\\times[\\hskip2pt]}]").name ==
        std::optional<std::string>("[3^[]x[]]"));
  CHECK(parse_diagram("[ 5, 3, 5 ]").matrix == CoxeterMatrix::chain(5, 3, 5));
}

TEST_CASE("special subgroups of [5,3,5] restricted by hand") {
  const auto d = parse_diagram("[5,3,5]");
  const auto subs = special_subgroups(d, 3);
  REQUIRE(subs.size() == 4);
  // Lexicographic subsets {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}.
  CHECK(subs[0].generators == std::vector<int>{0, 1, 2});
  CHECK(labels(subs[0]) == std::multiset<int>{5, 3, 2});
  CHECK(labels(subs[1]) == std::multiset<int>{5, 2, 2});
  CHECK(labels(subs[2]) == std::multiset<int>{2, 2, 5});
  CHECK(labels(subs[3]) == std::multiset<int>{3, 2, 5});

  const auto whole = special_subgroups(d, 4);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].submatrix == d.matrix);

  CHECK(special_subgroups(d, 1).size() == 4);
  CHECK(special_subgroups(d, 2).size() == 6);
}

TEST_CASE("rank-2 subgroups of [3,3,6]") {
  const auto subs = special_subgroups(parse_diagram("[3,3,6]"), 2);
  REQUIRE(subs.size() == 6);
  std::multiset<int> all;
  for (const auto& s : subs) all.insert(s.submatrix(0, 1));
  CHECK(all == std::multiset<int>{3, 3, 6, 2, 2, 2});
}

TEST_CASE("rank-2 subgroups are dihedral of the edge label") {
  for (const auto& name : registry_names()) {
    for (const auto& s : special_subgroups(parse_diagram(name), 2)) {
      const int m = s.submatrix(0, 1);
      const auto t = classify_rank2(s);
      CHECK(t.order() == static_cast<std::uint64_t>(2 * m));
      CHECK(t == FiniteGroupType::dihedral(m).canonical());
    }
  }
}

TEST_CASE("rank-3 classification table") {
  CHECK(classify_rank3(6, 3, 2).cusp() == CuspType::Tri36);
  CHECK(classify_rank3(4, 2, 4).cusp() == CuspType::Square44);
  CHECK(classify_rank3(3, 3, 3).cusp() == CuspType::Tri333);
  CHECK(classify_rank3(2, 2, 2).finite().canonical() == FiniteGroupType::c2_dihedral(2).canonical());
  CHECK(classify_rank3(2, 2, 2).finite().order() == 8);
  CHECK(classify_rank3(5, 3, 2).finite() == FiniteGroupType::c2_a5());
  CHECK(classify_rank3(2, 3, 5).finite().order() == 120);
  CHECK(classify_rank3(3, 2, 3).finite() == FiniteGroupType::s4());
  CHECK(classify_rank3(4, 3, 2).finite() == FiniteGroupType::c2_s4());
  CHECK(classify_rank3(2, 6, 2).finite() == FiniteGroupType::c2_dihedral(6));
  CHECK(classify_rank3(2, 5, 2).finite().canonical() == FiniteGroupType::dihedral(10));
  CHECK(code_of([] { classify_rank3(5, 5, 2); }) == ErrorCode::UnclassifiableRank3);
  CHECK(code_of([] { classify_rank3(4, 4, 3); }) == ErrorCode::UnclassifiableRank3);
}

TEST_CASE("canonical forms") {
  CHECK(FiniteGroupType::c2_dihedral(3).canonical() == FiniteGroupType::dihedral(6));
  CHECK(FiniteGroupType::c2_dihedral(5).canonical() == FiniteGroupType::dihedral(10));
  CHECK(FiniteGroupType::elem_abelian2(2).canonical() == FiniteGroupType::dihedral(2));
  CHECK(FiniteGroupType::elem_abelian2(3).canonical() == FiniteGroupType::c2_dihedral(2));
  CHECK(FiniteGroupType::c2_dihedral(6).canonical() == FiniteGroupType::c2_dihedral(6));
  CHECK(FiniteGroupType::dihedral(10).order() == 20);
  CHECK(FiniteGroupType::c2_a5().order() == 120);
  CHECK(FiniteGroupType::c2_s4().order() == 48);
  CHECK(FiniteGroupType::parse("Z/2 x D_6") == FiniteGroupType::c2_dihedral(6));
  CHECK(FiniteGroupType::parse("D5").name() == "D_5");
  CHECK(code_of([] { FiniteGroupType::parse("Q8"); }) == ErrorCode::UnknownType);
}

TEST_CASE("vertex profiles of the worked examples") {
  const auto a = vertex_profile(parse_diagram("[(3,5)^[2]]"));
  CHECK(a.ideal_count == 0);
  for (const auto& v : a.vertices) CHECK(v.finite() == FiniteGroupType::c2_a5());

  const auto b = vertex_profile(parse_diagram("[3,4^{1,1}]"));
  CHECK(b.ideal_count == 1);
  std::multiset<std::string> seen;
  for (const auto& v : b.vertices) seen.insert(v.describe());
  CHECK(seen.count(SubgroupClassification{FiniteGroupType::c2_s4()}.describe()) == 2);
  CHECK(seen.count(SubgroupClassification{FiniteGroupType::elem_abelian2(3).canonical()}.describe()) == 1);
  CHECK(seen.count(SubgroupClassification{CuspType::Square44}.describe()) == 1);

  // Every vertex of the 4-cycle with all labels 4 sees {4,4,2}.
  const auto c = vertex_profile(parse_diagram("[4^[4]]"));
  CHECK(c.ideal_count == 4);
  for (const auto& v : c.vertices) CHECK(v.cusp() == CuspType::Square44);
}

TEST_CASE("ideal-vertex counts follow the subsection membership lists") {
  std::map<int, int> counts;
  for (const auto& name : registry_names()) {
    const int ideal = vertex_profile(parse_diagram(name)).ideal_count;
    ++counts[ideal];
    CAPTURE(name);
    CHECK(membership().at(ideal).count(name) == 1);
  }
  CHECK(counts == std::map<int, int>{{0, 9}, {1, 9}, {2, 9}, {3, 2}, {4, 3}});
}

TEST_CASE("Gram sign agrees with classification and with the explicit determinant") {
  int checked = 0;
  for (const auto& name : registry_names()) {
    for (const auto& s : special_subgroups(parse_diagram(name), 3)) {
      const auto cls = classify_rank3(s);
      const auto gram = gram_check(s);
      const auto& m = s.submatrix;
      const double det = cosine_det(m(0, 1), m(0, 2), m(1, 2));
      CAPTURE(name);
      if (cls.spherical()) {
        CHECK(gram.sign == GramSign::PositiveDefinite);
        CHECK(det > 1e-9);
      } else {
        CHECK(gram.sign == GramSign::Semidefinite);
        CHECK(gram.zero_eigenvalues == 1);
        CHECK(std::abs(det) < 1e-9);
      }
      ++checked;
    }
  }
  CHECK(checked == 128);
}

TEST_CASE("Gram examples") {
  auto sub = [](int a, int b, int c) {
    return SpecialSubgroup{{0, 1, 2}, CoxeterMatrix(3, {1, a, b, a, 1, c, b, c, 1})};
  };
  CHECK(gram_check(sub(3, 2, 3)).sign == GramSign::PositiveDefinite);
  const auto affine = gram_check(sub(3, 3, 3));
  CHECK(affine.sign == GramSign::Semidefinite);
  CHECK(affine.zero_eigenvalues == 1);
  const auto id = gram_check(sub(2, 2, 2));
  CHECK(id.sign == GramSign::PositiveDefinite);
  for (double e : id.eigenvalues) CHECK(e == doctest::Approx(1.0));
  CHECK(gram_check(sub(4, 4, 4)).sign == GramSign::Indefinite);
}

TEST_CASE("concurrent parsing and classification") {
  std::vector<std::thread> pool;
  std::vector<int> ideal(8, 0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([t, &ideal] {
      int total = 0;
      for (const auto& name : registry_names()) total += vertex_profile(parse_diagram(name)).ideal_count;
      ideal[static_cast<std::size_t>(t)] = total;
    });
  for (auto& th : pool) th.join();
  for (int v : ideal) CHECK(v == 9 * 1 + 9 * 2 + 2 * 3 + 3 * 4);
}
