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
#include "hypk/assembly.hpp"

#include "hypk/error.hpp"
#include "hypk/finite_groups.hpp"

namespace hypk {

KValue wh_q(const FiniteGroupType& t, int q) {
  const KTheoryRecord r = ktheory_of(t);
  switch (q) {
    case kDegreeWh: return r.wh;
    case kDegreeK0: return r.k0_tilde;
    case kDegreeKm1: return r.k_minus1;
    default:
      if (q <= kDegreeBelow) return r.k_below_minus1;
      fail(ErrorCode::InvalidArgument, "degree " + std::to_string(q) + " is above 1");
  }
}

// ---------------------------------------------------------------------------
// Induced maps

const InducedMapCatalog& InducedMapCatalog::standard() {
  static const InducedMapCatalog catalog = [] {
    using F = FiniteGroupType;
    InducedMapCatalog c;
    // Wh(D_5) is a summand of Wh(D_10) = Z^2.
    c.set(F::dihedral(5), F::dihedral(10), kDegreeWh, IntegerMatrix{{1}, {0}});
    // Split injection Wh(D_5) -> Wh(Z/2 x A_5) = Z^2 with cokernel Z.
    c.set(F::dihedral(5), F::c2_a5(), kDegreeWh, IntegerMatrix{{1}, {0}});
    // K_{-1}(Z D_6) is a summand of K_{-1}(Z[Z/2 x D_6]) = Z^3.
    c.set(F::dihedral(6), F::c2_dihedral(6), kDegreeKm1, IntegerMatrix{{1}, {0}, {0}});
    // Truncation vertices carry the edge group itself.
    c.set(F::dihedral(5), F::dihedral(5), kDegreeWh, IntegerMatrix{{1}});
    c.set(F::dihedral(6), F::dihedral(6), kDegreeKm1, IntegerMatrix{{1}});
    return c;
  }();
  return catalog;
}

std::optional<IntegerMatrix> InducedMapCatalog::lookup(const FiniteGroupType& source,
                                                       const FiniteGroupType& target, int q) const {
  auto it = maps_.find({source.canonical(), target.canonical(), q});
  if (it == maps_.end()) return std::nullopt;
  return it->second;
}

void InducedMapCatalog::set(const FiniteGroupType& source, const FiniteGroupType& target, int q,
                            IntegerMatrix map) {
  maps_[{source.canonical(), target.canonical(), q}] = std::move(map);
}

// ---------------------------------------------------------------------------
// E2 page

E2Complex e2_complex(const EquivariantCellComplex& complex, int q, const InducedMapCatalog& maps) {
  // Generator offsets per 0-cell.
  std::vector<std::size_t> offset;
  std::vector<KValue> vertex_values;
  std::size_t rows = 0;
  std::size_t torsion = 0;
  for (const auto& cell : complex.dim(0)) {
    KValue v = wh_q(cell.stabilizer, q);
    if (v.inf_z2 || v.nil0 || v.nil1)
      fail(ErrorCode::Internal, "symbolic summand in a finite group K-value");
    offset.push_back(rows);
    rows += v.free_rank + v.torsion.size();
    torsion += v.torsion.size();
    vertex_values.push_back(std::move(v));
  }

  std::vector<std::size_t> edge_offset;
  std::size_t cols = 0;
  for (const auto& cell : complex.dim(1)) {
    const KValue v = wh_q(cell.stabilizer, q);
    if (!v.torsion.empty())
      fail(ErrorCode::MissingInducedMap, "edge group " + cell.stabilizer.name() + " has torsion in degree " +
                                             std::to_string(q) + "; no induced map is modelled");
    edge_offset.push_back(cols);
    cols += v.free_rank;
  }

  E2Complex out{IntegerMatrix(rows, cols), IntegerMatrix(rows, torsion), cols, rows};

  std::size_t rel = 0;
  for (std::size_t c = 0; c < vertex_values.size(); ++c) {
    const KValue& v = vertex_values[c];
    for (std::size_t t = 0; t < v.torsion.size(); ++t)
      out.relations(offset[c] + v.free_rank + t, rel++) = BigInt(v.torsion[t]);
  }

  for (std::size_t e = 0; e < complex.count(1); ++e) {
    const Cell& edge = complex.dim(1)[e];
    const std::size_t src_rank = wh_q(edge.stabilizer, q).free_rank;
    if (src_rank == 0) continue;
    for (std::size_t s = 0; s < 2; ++s) {
      const auto end = static_cast<std::size_t>(edge.endpoints[s]);
      const Cell& vertex = complex.dim(0)[end];
      const KValue& target = vertex_values[end];
      auto map = maps.lookup(edge.stabilizer, vertex.stabilizer, q);
      if (!map)
        fail(ErrorCode::MissingInducedMap, "no induced map " + edge.stabilizer.name() + " -> " +
                                               vertex.stabilizer.name() + " in degree " + std::to_string(q));
      if (map->cols() != src_rank || map->rows() != target.free_rank)
        fail(ErrorCode::Internal, "induced map " + edge.stabilizer.name() + " -> " +
                                      vertex.stabilizer.name() + " has the wrong shape");
      const BigInt sign = s == 0 ? 1 : -1;
      for (std::size_t i = 0; i < map->rows(); ++i)
        for (std::size_t j = 0; j < map->cols(); ++j)
          out.d1(offset[end] + i, edge_offset[e] + j) += sign * (*map)(i, j);
    }
  }
  return out;
}

E2Column e2_page(const EquivariantCellComplex& complex, int q, const InducedMapCatalog& maps) {
  const E2Complex c = e2_complex(complex, q, maps);
  const IntegerMatrix presentation = c.d1.hconcat(c.relations);
  E2Column col;
  col.e2_0 = cokernel(presentation);
  // Kernel of d1 on the free edge generators: project the kernel lattice of
  // the presentation onto the edge coordinates.
  const IntegerMatrix ker = kernel_basis(presentation).row_block(0, c.edge_rank);
  col.e2_1 = KValue::free(smith_normal_form(ker).rank());
  return col;
}

KGroups h_fin(const CoxeterDiagram& diagram) {
  const EquivariantCellComplex cx = build_cell_complex(diagram);
  KGroups out;
  for (int q : {kDegreeWh, kDegreeK0, kDegreeKm1}) {
    E2Column col = e2_page(cx, q);
    if (!col.e2_1.is_zero())
      fail(ErrorCode::NonCollapsingPage,
           "E2(1," + std::to_string(q) + ") = " + col.e2_1.render(false) + " is nonzero");
    out[q] = std::move(col.e2_0);
  }
  out[kDegreeBelow] = KValue::zero();
  return out;
}

// ---------------------------------------------------------------------------
// Cokernels of the relative assembly maps

KValue cokernel_of(const StabilizerDescriptor& desc, int n) {
  if (n > 1) fail(ErrorCode::InvalidArgument, "degree " + std::to_string(n) + " is above 1");
  if (n < 0) return KValue::zero();
  switch (desc.tag) {
    case StabilizerTag::DkTimesDinf:
      switch (desc.k) {
        case 2: return KValue::inf_z2_sum();
        case 3:
        case 5: return KValue::zero();
        case 4: return n == 0 ? KValue::nil0_sym() : KValue::nil1_sym();
        default: break;
      }
      break;
    case StabilizerTag::D4starD2D4:
    case StabilizerTag::MixedD2D4:
      return KValue::inf_z2_sum();
    case StabilizerTag::LoopType:
      break;
  }
  fail(ErrorCode::UnknownTag, "no cokernel data for " + desc.tag_name());
}

KGroups assemble(const CoxeterDiagram& diagram, const EdgeBehaviorTable& table) {
  KGroups k = h_fin(diagram);
  for (const auto& d : enumerate_type1(diagram, table))
    for (int n : {kDegreeWh, kDegreeK0, kDegreeKm1}) k[n] += cokernel_of(d, n);
  return k;
}

}  // namespace hypk
