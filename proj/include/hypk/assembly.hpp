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

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hypk/cell_complex.hpp"
#include "hypk/coxeter.hpp"
#include "hypk/geodesics.hpp"
#include "hypk/integer_matrix.hpp"
#include "hypk/kvalue.hpp"

namespace hypk {

/// Degrees of the lower K-groups. Wh_1 = Wh, Wh_0 = reduced K_0, Wh_{-1} =
/// K_{-1}; everything at or below -2 vanishes for the groups handled here.
inline constexpr int kDegreeWh = 1;
inline constexpr int kDegreeK0 = 0;
inline constexpr int kDegreeKm1 = -1;
inline constexpr int kDegreeBelow = -2;

/// Wh_q of the integral group ring of a finite group.
KValue wh_q(const FiniteGroupType& t, int q);

/// Maps Wh_q(H) -> Wh_q(G) induced by inclusions of cell stabilizers, as
/// matrices between the free summands (target rank x source rank).
class InducedMapCatalog {
 public:
  static const InducedMapCatalog& standard();

  std::optional<IntegerMatrix> lookup(const FiniteGroupType& source, const FiniteGroupType& target,
                                      int q) const;
  void set(const FiniteGroupType& source, const FiniteGroupType& target, int q, IntegerMatrix map);
  std::size_t size() const noexcept { return maps_.size(); }
  const std::map<std::tuple<FiniteGroupType, FiniteGroupType, int>, IntegerMatrix>& entries() const noexcept {
    return maps_;
  }

 private:
  std::map<std::tuple<FiniteGroupType, FiniteGroupType, int>, IntegerMatrix> maps_;
};

/// The one-dimensional cellular chain complex with Wh_q coefficients.
/// Free generators come first in each vertex block; each torsion summand
/// Z/d of a vertex group adds a generator and a relation column.
struct E2Complex {
  IntegerMatrix d1;         // vertex generators x edge generators
  IntegerMatrix relations;  // vertex generators x torsion summands
  std::size_t edge_rank = 0;
  std::size_t vertex_gens = 0;
};

E2Complex e2_complex(const EquivariantCellComplex& complex, int q,
                     const InducedMapCatalog& maps = InducedMapCatalog::standard());

struct E2Column {
  KValue e2_0;  // cokernel of d1
  KValue e2_1;  // kernel of d1
};

E2Column e2_page(const EquivariantCellComplex& complex, int q,
                 const InducedMapCatalog& maps = InducedMapCatalog::standard());

/// Lower K-groups indexed by degree: 1, 0, -1, and -2 standing for all n <= -2.
using KGroups = std::map<int, KValue>;

/// Equivariant homology of the space for proper actions. Throws
/// NonCollapsingPage if some E2_{1,q} is nonzero.
KGroups h_fin(const CoxeterDiagram& diagram);

/// Cokernel of the relative assembly map contributed by a type I geodesic
/// stabilizer in degree n.
KValue cokernel_of(const StabilizerDescriptor& desc, int n);

/// Lower K-theory by the splitting formula: h_fin plus the cokernels of all
/// type I stabilizers.
KGroups assemble(const CoxeterDiagram& diagram,
                 const EdgeBehaviorTable& table = EdgeBehaviorTable::standard());

}  // namespace hypk
