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
#include "hypk/cell_complex.hpp"

#include <algorithm>
#include <map>

#include "hypk/error.hpp"
#include "hypk/geodesics.hpp"

namespace hypk {

std::string_view origin_name(CellOrigin o) noexcept {
  switch (o) {
    case CellOrigin::SimplexVertex: return "simplex vertex";
    case CellOrigin::SimplexEdge: return "simplex edge";
    case CellOrigin::SimplexFace: return "simplex face";
    case CellOrigin::SimplexInterior: return "simplex interior";
    case CellOrigin::TruncationVertex: return "truncation vertex";
    case CellOrigin::TruncationEdge: return "truncation edge";
    case CellOrigin::TruncationFace: return "truncation face";
  }
  return "?";
}

EquivariantCellComplex build_cell_complex(const CoxeterDiagram& diagram) {
  const VertexProfile profile = vertex_profile(diagram);
  const CoxeterMatrix& m = diagram.matrix;
  EquivariantCellComplex cx;
  cx.ideal_vertices = profile.ideal_count;
  auto& c0 = cx.cells[0];
  auto& c1 = cx.cells[1];
  auto& c2 = cx.cells[2];

  auto others = [](std::initializer_list<int> skip) {
    std::vector<int> g;
    for (int i = 0; i < 4; ++i)
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) g.push_back(i);
    return g;
  };

  // 0-cells. A finite vertex keeps its own cell; an ideal vertex is replaced
  // by one truncation vertex on each of its three incident edges.
  std::map<int, int> vertex_cell;                              // simplex vertex -> 0-cell
  std::map<std::pair<int, std::array<int, 2>>, int> trunc_cell;  // (ideal vertex, edge) -> 0-cell
  for (int v = 0; v < 4; ++v) {
    if (profile.ideal(v)) continue;
    vertex_cell[v] = static_cast<int>(c0.size());
    c0.push_back({0, profile.vertices[static_cast<std::size_t>(v)].finite(), CellOrigin::SimplexVertex,
                  others({v}), -1, {-1, -1}});
  }
  for (int v = 0; v < 4; ++v) {
    if (!profile.ideal(v)) continue;
    const auto g = others({v});
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        const std::array<int, 2> e{g[a], g[b]};
        trunc_cell[{v, e}] = static_cast<int>(c0.size());
        c0.push_back({0, FiniteGroupType::dihedral(m(e[0], e[1])), CellOrigin::TruncationVertex,
                      {e[0], e[1]}, v, {-1, -1}});
      }
  }

  // 1-cells: simplex edges, then the sides of each truncation triangle.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const std::array<int, 2> e{i, j};
      Cell cell{1, FiniteGroupType::dihedral(m(i, j)), CellOrigin::SimplexEdge, {i, j}, -1, {-1, -1}};
      const auto ends = edge_endpoints(e);
      for (std::size_t s = 0; s < 2; ++s) {
        const int v = ends[s];
        cell.endpoints[s] = profile.ideal(v) ? trunc_cell.at({v, e}) : vertex_cell.at(v);
      }
      c1.push_back(std::move(cell));
    }
  for (int v = 0; v < 4; ++v) {
    if (!profile.ideal(v)) continue;
    // The side lying in mirror f joins the truncation vertices on the two
    // edges through f.
    for (int f : others({v})) {
      std::vector<int> ends;
      for (int o : others({v, f})) {
        const std::array<int, 2> e{std::min(f, o), std::max(f, o)};
        ends.push_back(trunc_cell.at({v, e}));
      }
      c1.push_back({1, FiniteGroupType::c2(), CellOrigin::TruncationEdge, {f}, v, {ends[0], ends[1]}});
    }
  }

  // 2-cells: the four mirrors and one truncation triangle per ideal vertex.
  for (int f = 0; f < 4; ++f)
    c2.push_back({2, FiniteGroupType::c2(), CellOrigin::SimplexFace, {f}, -1, {-1, -1}});
  for (int v = 0; v < 4; ++v)
    if (profile.ideal(v))
      c2.push_back({2, FiniteGroupType::trivial(), CellOrigin::TruncationFace, {}, v, {-1, -1}});

  cx.cells[3].push_back({3, FiniteGroupType::trivial(), CellOrigin::SimplexInterior, {}, -1, {-1, -1}});
  return cx;
}

}  // namespace hypk
