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
#include <string>
#include <vector>

#include "hypk/coxeter.hpp"

namespace hypk {

enum class CellOrigin {
  SimplexVertex,
  SimplexEdge,
  SimplexFace,
  SimplexInterior,
  TruncationVertex,
  TruncationEdge,
  TruncationFace,
};

std::string_view origin_name(CellOrigin o) noexcept;

struct Cell {
  int dim = 0;
  FiniteGroupType stabilizer = FiniteGroupType::trivial();
  CellOrigin origin = CellOrigin::SimplexVertex;
  std::vector<int> generators;          // generators fixing the cell's simplex face
  int ideal_vertex = -1;                // owning ideal vertex for truncation cells
  std::array<int, 2> endpoints{-1, -1};  // 0-cell indices, 1-cells only
};

/// Cells of the fundamental simplex with horoball neighborhoods of its ideal
/// vertices removed, with their isotropy groups.
struct EquivariantCellComplex {
  std::array<std::vector<Cell>, 4> cells;
  int ideal_vertices = 0;

  const std::vector<Cell>& dim(int d) const { return cells[static_cast<std::size_t>(d)]; }
  std::size_t count(int d) const { return dim(d).size(); }
};

EquivariantCellComplex build_cell_complex(const CoxeterDiagram& diagram);

}  // namespace hypk
