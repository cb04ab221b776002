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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypk/coxeter.hpp"

namespace hypk {

/// How a reflecting endpoint's vertex group splits over the edge group D_k:
/// as Z/2 x D_k, or as the doubled dihedral group D_2k.
enum class VertexForm { ProductC2, Doubled };

/// Where an extending geodesic continues at a vertex: through the other edge
/// with the same label, or back onto itself (the antipodal map lies in the
/// vertex group, which then acts as a reflection of the geodesic).
enum class Pairing { Swap, SelfPaired };

struct EdgeBehavior {
  bool extends = false;
  VertexForm form = VertexForm::ProductC2;  // for reflecting slots
  Pairing pairing = Pairing::Swap;          // for extending slots

  static EdgeBehavior reflects(VertexForm f) { return {false, f, Pairing::Swap}; }
  static EdgeBehavior extends_to(Pairing p) { return {true, VertexForm::ProductC2, p}; }
  friend bool operator==(const EdgeBehavior&, const EdgeBehavior&) = default;
};

/// Local behavior of a geodesic along an edge with label m (angle pi/m) at a
/// finite vertex group. Rows are keyed by the vertex type as classified from
/// its labels and by the edge label.
class EdgeBehaviorTable {
 public:
  static const EdgeBehaviorTable& standard();

  /// Throws UnknownType when the pair is not tabulated.
  EdgeBehavior lookup(const FiniteGroupType& vertex, int label) const;
  void set(const FiniteGroupType& vertex, int label, EdgeBehavior behavior);
  const std::map<std::pair<FiniteGroupType, int>, EdgeBehavior>& rows() const noexcept { return rows_; }

 private:
  std::map<std::pair<FiniteGroupType, int>, EdgeBehavior> rows_;
};

enum class StabilizerTag { DkTimesDinf, D4starD2D4, MixedD2D4, LoopType };

/// Stabilizer of a periodic geodesic running along the 1-skeleton, as an
/// amalgam G_v *_{D_k} G_w of the two endpoint groups.
struct StabilizerDescriptor {
  int k = 0;
  VertexForm left = VertexForm::ProductC2;
  VertexForm right = VertexForm::ProductC2;
  StabilizerTag tag = StabilizerTag::DkTimesDinf;

  /// Canonicalizes the pair of endpoint forms. Throws UnsupportedStabilizer
  /// for amalgams outside the handled list (e.g. D_8 *_{D_4} D_8).
  static StabilizerDescriptor make(int k, VertexForm left, VertexForm right);

  /// Amalgam notation, e.g. "D_10 *_{D_5} D_10", "(D_2 x Z/2) *_{D_2} D_4",
  /// "D_2 x D_inf".
  std::string render() const;
  /// Canonical tag, e.g. "DkTimesDinf(3)", "D4starD2D4".
  std::string tag_name() const;

  /// Same isomorphism class (left/right order ignored).
  bool same_type(const StabilizerDescriptor& other) const;
};

/// (edge, endpoint vertex) pair visited by a walk. The edge is a pair of
/// generators, the vertex is the generator it omits.
struct WalkState {
  std::array<int, 2> edge;
  int toward;
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

inline constexpr int kMaxWalkStates = 12;

struct GeodesicPath {
  int label = 0;                        // common edge label k
  std::vector<std::array<int, 2>> edges;  // every edge the path runs along
  std::optional<VertexForm> left;       // nullopt when that end is ideal
  std::optional<VertexForm> right;
  bool discarded = false;               // an end reached an ideal vertex
  std::optional<StabilizerDescriptor> descriptor;
};

/// All maximal 1-skeleton paths, including discarded ones.
std::vector<GeodesicPath> trace_type1(const CoxeterDiagram& diagram,
                                      const EdgeBehaviorTable& table = EdgeBehaviorTable::standard());

/// One descriptor per maximal path whose ends both reflect.
std::vector<StabilizerDescriptor> enumerate_type1(
    const CoxeterDiagram& diagram, const EdgeBehaviorTable& table = EdgeBehaviorTable::standard());

/// Affine types of the ideal vertices.
std::vector<CuspType> cusp_groups(const CoxeterDiagram& diagram);

/// The two simplex vertices joined by an edge: the generators outside it.
std::array<int, 2> edge_endpoints(const std::array<int, 2>& edge);

}  // namespace hypk
