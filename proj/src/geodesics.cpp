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
#include "hypk/geodesics.hpp"

#include <algorithm>
#include <set>

#include "hypk/error.hpp"

namespace hypk {

// ---------------------------------------------------------------------------
// Edge behavior

const EdgeBehaviorTable& EdgeBehaviorTable::standard() {
  static const EdgeBehaviorTable table = [] {
    using F = FiniteGroupType;
    const auto product = EdgeBehavior::reflects(VertexForm::ProductC2);
    const auto doubled = EdgeBehavior::reflects(VertexForm::Doubled);
    EdgeBehaviorTable t;
    t.set(F::elem_abelian2(3), 2, product);
    t.set(F::c2_dihedral(2), 2, product);
    for (int n = 3; n <= 6; ++n) {
      t.set(F::c2_dihedral(n), n, product);
      // The two right-angle edges trade places under the antipodal map when
      // n is odd; for even n the antipodal map is central and fixes each.
      t.set(F::c2_dihedral(n), 2,
            EdgeBehavior::extends_to(n % 2 ? Pairing::Swap : Pairing::SelfPaired));
    }
    t.set(F::s4(), 3, EdgeBehavior::extends_to(Pairing::Swap));
    t.set(F::s4(), 2, doubled);
    t.set(F::c2_s4(), 4, product);
    t.set(F::c2_s4(), 3, doubled);
    t.set(F::c2_s4(), 2, product);
    t.set(F::c2_a5(), 5, doubled);
    t.set(F::c2_a5(), 3, doubled);
    t.set(F::c2_a5(), 2, product);
    return t;
  }();
  return table;
}

EdgeBehavior EdgeBehaviorTable::lookup(const FiniteGroupType& vertex, int label) const {
  auto it = rows_.find({vertex, label});
  if (it == rows_.end()) {
    // Accept either spelling of the same group, e.g. C2xD_3 and D_6.
    const FiniteGroupType c = vertex.canonical();
    it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& row) {
      return row.first.second == label && row.first.first.canonical() == c;
    });
  }
  if (it == rows_.end())
    fail(ErrorCode::UnknownType,
         "no edge behavior for label " + std::to_string(label) + " at vertex " + vertex.name());
  return it->second;
}

void EdgeBehaviorTable::set(const FiniteGroupType& vertex, int label, EdgeBehavior behavior) {
  rows_[{vertex, label}] = behavior;
}

// ---------------------------------------------------------------------------
// Descriptors

StabilizerDescriptor StabilizerDescriptor::make(int k, VertexForm left, VertexForm right) {
  using V = VertexForm;
  StabilizerDescriptor d{k, left, right, StabilizerTag::DkTimesDinf};
  if (k < 2) fail(ErrorCode::UnsupportedStabilizer, "edge group must be D_k with k >= 2");
  if ((left == V::ProductC2 && right == V::ProductC2) || k % 2 == 1) return d;
  if (k == 2) {
    d.tag = (left == V::Doubled && right == V::Doubled) ? StabilizerTag::D4starD2D4
                                                        : StabilizerTag::MixedD2D4;
    return d;
  }
  d.tag = StabilizerTag::LoopType;
  fail(ErrorCode::UnsupportedStabilizer,
       "unsupported amalgam over D_" + std::to_string(k) + ": " + d.render());
}

std::string StabilizerDescriptor::render() const {
  using V = VertexForm;
  const std::string dk = "D_" + std::to_string(k);
  const std::string d2k = "D_" + std::to_string(2 * k);
  if (left == V::ProductC2 && right == V::ProductC2) return dk + " x D_inf";
  if (left == V::Doubled && right == V::Doubled) return d2k + " *_{" + dk + "} " + d2k;
  return "(" + dk + " x Z/2) *_{" + dk + "} " + d2k;
}

std::string StabilizerDescriptor::tag_name() const {
  switch (tag) {
    case StabilizerTag::DkTimesDinf: return "DkTimesDinf(" + std::to_string(k) + ")";
    case StabilizerTag::D4starD2D4: return "D4starD2D4";
    case StabilizerTag::MixedD2D4: return "MixedD2D4";
    case StabilizerTag::LoopType: return "LoopType(" + std::to_string(k) + ")";
  }
  return "?";
}

bool StabilizerDescriptor::same_type(const StabilizerDescriptor& other) const {
  return k == other.k && tag == other.tag;
}

// ---------------------------------------------------------------------------
// Walks

std::array<int, 2> edge_endpoints(const std::array<int, 2>& edge) {
  std::array<int, 2> out{};
  int n = 0;
  for (int g = 0; g < 4; ++g)
    if (g != edge[0] && g != edge[1]) out[static_cast<std::size_t>(n++)] = g;
  return out;
}

namespace {

int label_of(const CoxeterMatrix& m, const std::array<int, 2>& e) { return m(e[0], e[1]); }

struct RayEnd {
  std::optional<VertexForm> form;  // nullopt: ideal vertex reached
};

class Walker {
 public:
  Walker(const CoxeterDiagram& d, const VertexProfile& p, const EdgeBehaviorTable& t,
         std::set<std::array<int, 2>>& consumed)
      : m_(d.matrix), profile_(p), table_(t), consumed_(consumed) {}

  // Follows the geodesic from `start` until it reflects, folds or hits an
  // ideal vertex. Appends newly visited edges to `edges`.
  RayEnd run(WalkState start, std::vector<std::array<int, 2>>& edges) {
    const int label = label_of(m_, start.edge);
    std::vector<WalkState> seen{start};
    WalkState s = start;
    while (true) {
      const auto& vertex = profile_.vertices[static_cast<std::size_t>(s.toward)];
      if (!vertex.spherical()) return {std::nullopt};
      const EdgeBehavior b = table_.lookup(vertex.finite(), label);
      if (!b.extends) return {b.form};
      if (b.pairing == Pairing::SelfPaired) return {VertexForm::ProductC2};

      const std::array<int, 2> next = partner(s, label);
      const auto ends = edge_endpoints(next);
      const WalkState t{next, ends[0] == s.toward ? ends[1] : ends[0]};
      if (std::find(seen.begin(), seen.end(), t) != seen.end() ||
          static_cast<int>(seen.size()) >= kMaxWalkStates)
        fail(ErrorCode::LoopDetected, "geodesic along label " + std::to_string(label) +
                                          " edges closes up into a loop");
      seen.push_back(t);
      if (consumed_.insert(next).second) edges.push_back(next);
      s = t;
    }
  }

 private:
  // The other edge at vertex s.toward carrying the same label.
  std::array<int, 2> partner(const WalkState& s, int label) const {
    std::vector<int> gens;
    for (int g = 0; g < 4; ++g)
      if (g != s.toward) gens.push_back(g);
    std::vector<std::array<int, 2>> candidates;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        const std::array<int, 2> e{gens[a], gens[b]};
        if (e != s.edge && label_of(m_, e) == label) candidates.push_back(e);
      }
    if (candidates.size() != 1)
      fail(ErrorCode::Internal, "extension has no unique partner edge with label " + std::to_string(label));
    return candidates.front();
  }

  const CoxeterMatrix& m_;
  const VertexProfile& profile_;
  const EdgeBehaviorTable& table_;
  std::set<std::array<int, 2>>& consumed_;
};

}  // namespace

std::vector<GeodesicPath> trace_type1(const CoxeterDiagram& diagram, const EdgeBehaviorTable& table) {
  const VertexProfile profile = vertex_profile(diagram);
  std::set<std::array<int, 2>> consumed;
  Walker walker(diagram, profile, table, consumed);
  std::vector<GeodesicPath> paths;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const std::array<int, 2> e{i, j};
      if (!consumed.insert(e).second) continue;
      GeodesicPath path;
      path.label = diagram.matrix(i, j);
      path.edges.push_back(e);
      const auto ends = edge_endpoints(e);
      path.left = walker.run({e, ends[0]}, path.edges).form;
      path.right = walker.run({e, ends[1]}, path.edges).form;
      path.discarded = !path.left || !path.right;
      if (!path.discarded) path.descriptor = StabilizerDescriptor::make(path.label, *path.left, *path.right);
      paths.push_back(std::move(path));
    }
  return paths;
}

std::vector<StabilizerDescriptor> enumerate_type1(const CoxeterDiagram& diagram,
                                                  const EdgeBehaviorTable& table) {
  std::vector<StabilizerDescriptor> out;
  for (const auto& p : trace_type1(diagram, table))
    if (p.descriptor) out.push_back(*p.descriptor);
  return out;
}

std::vector<CuspType> cusp_groups(const CoxeterDiagram& diagram) {
  const VertexProfile profile = vertex_profile(diagram);
  std::vector<CuspType> out;
  for (const auto& v : profile.vertices)
    if (!v.spherical()) out.push_back(v.cusp());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypk
