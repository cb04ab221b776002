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
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "hypk/coxeter.hpp"
#include "hypk/error.hpp"
#include "hypk/geodesics.hpp"

using namespace hypk;

namespace {

using FT = FiniteGroupType;
using V = VertexForm;

std::multiset<std::string> tags(const std::string& name) {
  std::multiset<std::string> out;
  for (const auto& d : enumerate_type1(parse_diagram(name))) out.insert(d.tag_name());
  return out;
}

std::multiset<std::string> renders(const CoxeterDiagram& d) {
  std::multiset<std::string> out;
  for (const auto& s : enumerate_type1(d)) out.insert(s.render());
  return out;
}

CoxeterDiagram permuted(const CoxeterDiagram& d, const std::array<int, 4>& perm) {
  std::vector<int> e(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      e[static_cast<std::size_t>(4 * perm[static_cast<std::size_t>(i)] + perm[static_cast<std::size_t>(j)])] =
          d.matrix(i, j);
  return {std::nullopt, CoxeterMatrix(4, e)};
}

}  // namespace

TEST_CASE("edge behavior table rows") {
  const auto& t = EdgeBehaviorTable::standard();
  const auto reflects = [](V f) { return EdgeBehavior::reflects(f); };
  const auto c2d2 = FT::c2_dihedral(2);
  CHECK(t.lookup(c2d2, 2) == reflects(V::ProductC2));
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto type = FT::c2_dihedral(n).canonical();
    CHECK(t.lookup(type, n) == reflects(V::ProductC2));
    const auto slot2 = t.lookup(type, 2);
    CHECK(slot2.extends);
    CHECK(slot2.pairing == (n % 2 ? Pairing::Swap : Pairing::SelfPaired));
  }
  CHECK(t.lookup(FT::s4(), 3).extends);
  CHECK(t.lookup(FT::s4(), 3).pairing == Pairing::Swap);
  CHECK(t.lookup(FT::s4(), 2) == reflects(V::Doubled));
  CHECK(t.lookup(FT::c2_s4(), 4) == reflects(V::ProductC2));
  CHECK(t.lookup(FT::c2_s4(), 3) == reflects(V::Doubled));
  CHECK(t.lookup(FT::c2_s4(), 2) == reflects(V::ProductC2));
  CHECK(t.lookup(FT::c2_a5(), 5) == reflects(V::Doubled));
  CHECK(t.lookup(FT::c2_a5(), 3) == reflects(V::Doubled));
  CHECK(t.lookup(FT::c2_a5(), 2) == reflects(V::ProductC2));
  CHECK_THROWS_AS(t.lookup(FT::c2_a5(), 4), Error);
}

TEST_CASE("descriptor canonicalization") {
  CHECK(StabilizerDescriptor::make(3, V::Doubled, V::Doubled).tag == StabilizerTag::DkTimesDinf);
  CHECK(StabilizerDescriptor::make(5, V::ProductC2, V::Doubled).tag == StabilizerTag::DkTimesDinf);
  CHECK(StabilizerDescriptor::make(4, V::ProductC2, V::ProductC2).tag == StabilizerTag::DkTimesDinf);
  CHECK(StabilizerDescriptor::make(2, V::Doubled, V::Doubled).tag == StabilizerTag::D4starD2D4);
  CHECK(StabilizerDescriptor::make(2, V::ProductC2, V::Doubled).tag == StabilizerTag::MixedD2D4);
  CHECK(StabilizerDescriptor::make(2, V::Doubled, V::ProductC2).tag == StabilizerTag::MixedD2D4);
  try {
    StabilizerDescriptor::make(4, V::Doubled, V::Doubled);
    FAIL("D_8 *_{D_4} D_8 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStabilizer);
  }

  for (int k : {2, 3, 4, 5, 6})
    for (V l : {V::ProductC2, V::Doubled})
      for (V r : {V::ProductC2, V::Doubled}) {
        if (k % 2 == 0 && k != 2 && !(l == V::ProductC2 && r == V::ProductC2)) continue;
        const auto d = StabilizerDescriptor::make(k, l, r);
        const auto again = StabilizerDescriptor::make(d.k, d.left, d.right);
        const auto reversed = StabilizerDescriptor::make(k, r, l);
        CHECK(again.tag == d.tag);
        CHECK(d.same_type(reversed));
        CHECK(d.render() == reversed.render());
        CHECK(d.tag_name() == reversed.tag_name());
      }
}

TEST_CASE("descriptor rendering") {
  CHECK(StabilizerDescriptor::make(5, V::Doubled, V::Doubled).render() == "D_10 *_{D_5} D_10");
  CHECK(StabilizerDescriptor::make(2, V::ProductC2, V::ProductC2).render() == "D_2 x D_inf");
  CHECK(StabilizerDescriptor::make(3, V::ProductC2, V::Doubled).render() == "(D_3 x Z/2) *_{D_3} D_6");
  CHECK(StabilizerDescriptor::make(2, V::Doubled, V::Doubled).render() == "D_4 *_{D_2} D_4");
  CHECK(StabilizerDescriptor::make(3, V::Doubled, V::Doubled).tag_name() == "DkTimesDinf(3)");
}

TEST_CASE("stabilizer examples") {
  CHECK(tags("[(3,5)^[2]]") == std::multiset<std::string>{"DkTimesDinf(5)", "DkTimesDinf(5)", "DkTimesDinf(3)",
                                                          "DkTimesDinf(3)", "DkTimesDinf(2)", "DkTimesDinf(2)"});
  CHECK(renders(parse_diagram("[(3,5)^[2]]")) ==
        std::multiset<std::string>{"D_10 *_{D_5} D_10", "D_10 *_{D_5} D_10", "D_6 *_{D_3} D_6",
                                   "D_6 *_{D_3} D_6", "D_2 x D_inf", "D_2 x D_inf"});
  CHECK(tags("[(3^3,6)]").empty());
  CHECK(tags("[3,3^[3]]") == std::multiset<std::string>{"D4starD2D4"});
  CHECK(tags("[3,4^{1,1}]") == std::multiset<std::string>{"DkTimesDinf(3)", "DkTimesDinf(2)", "DkTimesDinf(2)"});
}

TEST_CASE("cusp examples") {
  CHECK(cusp_groups(parse_diagram("[5,3,6]")) == std::vector<CuspType>{CuspType::Tri36});
  CHECK(cusp_groups(parse_diagram("[6,3,6]")) == std::vector<CuspType>{CuspType::Tri36, CuspType::Tri36});
  CHECK(cusp_groups(parse_diagram("[(3,5)^[2]]")).empty());
}

TEST_CASE("paths are uniform in label and bounded") {
  for (const auto& name : registry_names()) {
    CAPTURE(name);
    const auto d = parse_diagram(name);
    std::set<std::array<int, 2>> covered;
    for (const auto& p : trace_type1(d)) {
      CHECK(static_cast<int>(p.edges.size()) <= kMaxWalkStates);
      for (const auto& e : p.edges) {
        CHECK(d.matrix(e[0], e[1]) == p.label);
        CHECK(covered.insert(e).second);  // each edge lies on one path
      }
      CHECK(p.discarded == !p.descriptor.has_value());
      if (p.descriptor) CHECK(p.descriptor->k == p.label);
    }
    CHECK(covered.size() == 6);
  }
}

TEST_CASE("groups with three or more ideal vertices emit nothing") {
  for (const auto& name : registry_names()) {
    const auto d = parse_diagram(name);
    if (vertex_profile(d).ideal_count >= 3) {
      CAPTURE(name);
      CHECK(enumerate_type1(d).empty());
    }
  }
}

TEST_CASE("output does not depend on generator order") {
  std::array<int, 4> perm{0, 1, 2, 3};
  for (const auto& name : registry_names()) {
    const auto d = parse_diagram(name);
    const auto base = renders(d);
    std::array<int, 4> p = perm;
    do {
      CAPTURE(name);
      CHECK(renders(permuted(d, p)) == base);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("a closed chain of extending edges is reported") {
  // Every vertex of the all-3 square is S4 and extends along both 3-edges.
  try {
    enumerate_type1(parse_diagram("[(3,3,3,3)]"));
    FAIL("expected LoopDetected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopDetected);
  }
}

TEST_CASE("unknown vertex types surface as errors") {
  EdgeBehaviorTable empty;
  CHECK_THROWS_AS(enumerate_type1(parse_diagram("[5,3,5]"), empty), Error);
}
