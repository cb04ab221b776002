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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypk/coxeter.hpp"
#include "hypk/kvalue.hpp"

namespace hypk {

/// Image list of a permutation of {0, ..., degree-1}.
using Permutation = std::vector<std::uint8_t>;

/// Conjugacy class data of a realized group.
struct ClassData {
  std::vector<std::vector<int>> classes;  // element indices per class
  std::vector<int> class_of;              // element index -> class index
  std::vector<int> element_orders;        // element index -> order
  int exponent = 1;

  std::size_t class_count() const { return classes.size(); }
  int representative(int cls) const { return classes[static_cast<std::size_t>(cls)].front(); }
  int class_order(int cls) const { return element_orders[static_cast<std::size_t>(representative(cls))]; }
};

/// Finite permutation group given by generators. The element list, the
/// multiplication table and the conjugacy classes are built lazily on first
/// use, exactly once, and shared between copies.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// All elements; index 0 is the identity.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }

  /// Index of a*b (apply b first, then a).
  int multiply(int a, int b) const;
  int inverse(int a) const;
  /// Index of x^k for any integer k.
  int power(int x, long long k) const;
  int element_order(int x) const;
  int index_of(const Permutation& p) const;  // -1 if not an element
  const ClassData& classes() const;

  struct Tables;

 private:
  const Tables& tables() const;

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Tables> tables_;
};

const ClassData& class_data(const PermutationGroup& g);

/// Class index of x^k for x in class `cls`.
int power_class(const PermutationGroup& g, int cls, long long k);

enum class FieldKind { Rational, PadicRational, FiniteField };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  int p = 0;

  static FieldDescriptor rational() { return {FieldKind::Rational, 0}; }
  static FieldDescriptor padic(int p) { return {FieldKind::PadicRational, p}; }
  static FieldDescriptor finite_field(int p) { return {FieldKind::FiniteField, p}; }
  std::string name() const;
};

/// Faithful permutation realization of a catalog type: dihedral groups on
/// n points (D_2 on 4), direct products on disjoint unions, S4 on 4 points,
/// A5 on 5 points.
PermutationGroup realize(const FiniteGroupType& t);

/// Number of conjugacy classes of unordered pairs {x, x^-1}.
int count_r(const PermutationGroup& g);
/// Number of conjugacy classes of cyclic subgroups.
int count_q(const PermutationGroup& g);
/// Free rank of Wh(G), r - q.
int wh_rank(const PermutationGroup& g);

/// Number of simple components of F[G] (number of F-conjugacy classes).
/// Throws NonPrimeP when the field needs a prime and p is not one.
int k_classes(const PermutationGroup& g, const FieldDescriptor& f);

/// Free rank of K_{-1}(Z G) from the component counts over Q, Q_p and F_p.
int carter_k_minus1_rank(const PermutationGroup& g);

bool is_prime(int p) noexcept;
std::vector<int> prime_divisors(std::uint64_t n);

struct KTheoryRecord {
  KValue wh;
  KValue k0_tilde;
  KValue k_minus1;
  KValue k_below_minus1;
  bool torsion_free_k_minus1 = true;
  std::string source;
};

/// Lower K-theory of the integral group ring of a catalog type. Values not
/// listed are zero.
KTheoryRecord ktheory_of(const FiniteGroupType& t);

/// Types carrying nonzero lower K-theory.
std::vector<FiniteGroupType> ktheory_nonzero_types();

/// Every finite stabilizer type that occurs in the catalog, plus A5.
std::vector<FiniteGroupType> catalog_finite_types();

}  // namespace hypk
