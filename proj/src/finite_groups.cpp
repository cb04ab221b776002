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
#include "hypk/finite_groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "hypk/error.hpp"

namespace hypk {

struct PermutationGroup::Tables {
  std::once_flag once;
  std::vector<Permutation> elements;
  std::map<Permutation, int> index;
  std::vector<int> mul;  // mul[a * n + b] = a*b
  std::vector<int> inv;
  ClassData classes;
};

namespace {

using Index = std::size_t;

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (Index i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation identity(int degree) {
  Permutation e(static_cast<Index>(degree));
  std::iota(e.begin(), e.end(), std::uint8_t{0});
  return e;
}

void build(PermutationGroup::Tables& t, int degree, const std::vector<Permutation>& gens) {
  t.elements.push_back(identity(degree));
  t.index.emplace(t.elements.front(), 0);
  for (Index head = 0; head < t.elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation y = compose(g, t.elements[head]);
      if (t.index.emplace(y, static_cast<int>(t.elements.size())).second)
        t.elements.push_back(std::move(y));
    }
  }
  const Index n = t.elements.size();
  t.mul.resize(n * n);
  t.inv.resize(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const int ab = t.index.at(compose(t.elements[a], t.elements[b]));
      t.mul[a * n + b] = ab;
      if (ab == 0) t.inv[a] = static_cast<int>(b);
    }

  ClassData& cd = t.classes;
  cd.element_orders.resize(n);
  for (Index x = 0; x < n; ++x) {
    int k = 1;
    for (int y = static_cast<int>(x); y != 0; y = t.mul[x * n + static_cast<Index>(y)]) ++k;
    cd.element_orders[x] = k;
    cd.exponent = std::lcm(cd.exponent, k);
  }
  cd.class_of.assign(n, -1);
  for (Index x = 0; x < n; ++x) {
    if (cd.class_of[x] >= 0) continue;
    const int id = static_cast<int>(cd.classes.size());
    std::vector<int> cls;
    for (Index g = 0; g < n; ++g) {
      const auto gx = static_cast<Index>(t.mul[g * n + x]);
      const auto y = static_cast<Index>(t.mul[gx * n + static_cast<Index>(t.inv[g])]);
      if (cd.class_of[y] < 0) {
        cd.class_of[y] = id;
        cls.push_back(static_cast<int>(y));
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.classes.push_back(std::move(cls));
  }
}

// Orbits of the selected classes under x -> x^k, k ranging over `powers`.
int class_orbits(const PermutationGroup& g, const std::vector<long long>& powers,
                 const std::vector<bool>& selected) {
  const ClassData& cd = g.classes();
  const int m = static_cast<int>(cd.class_count());
  std::vector<int> parent(static_cast<Index>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<Index>(i)] != i) i = parent[static_cast<Index>(i)];
    return i;
  };
  for (int c = 0; c < m; ++c) {
    if (!selected[static_cast<Index>(c)]) continue;
    for (long long k : powers) {
      const int d = power_class(g, c, k);
      if (selected[static_cast<Index>(d)]) parent[static_cast<Index>(find(c))] = find(d);
    }
  }
  std::set<int> roots;
  for (int c = 0; c < m; ++c)
    if (selected[static_cast<Index>(c)]) roots.insert(find(c));
  return static_cast<int>(roots.size());
}

std::vector<long long> units_mod(int m) {
  std::vector<long long> u;
  for (int k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) u.push_back(k);
  return u;
}

std::vector<bool> all_classes(const PermutationGroup& g) {
  return std::vector<bool>(g.classes().class_count(), true);
}

void require_prime(int p) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), tables_(std::make_shared<Tables>()) {
  if (degree_ < 1 || degree_ > 255) fail(ErrorCode::InvalidArgument, "permutation degree out of range");
  for (const auto& g : generators_) {
    if (g.size() != static_cast<Index>(degree_))
      fail(ErrorCode::InvalidArgument, "generator has the wrong degree");
    std::vector<bool> seen(g.size());
    for (auto x : g) {
      if (x >= g.size() || seen[x]) fail(ErrorCode::InvalidArgument, "generator is not a permutation");
      seen[x] = true;
    }
  }
}

const PermutationGroup::Tables& PermutationGroup::tables() const {
  std::call_once(tables_->once, [this] { build(*tables_, degree_, generators_); });
  return *tables_;
}

const std::vector<Permutation>& PermutationGroup::elements() const { return tables().elements; }

const ClassData& PermutationGroup::classes() const { return tables().classes; }

int PermutationGroup::multiply(int a, int b) const {
  const auto& t = tables();
  return t.mul[static_cast<Index>(a) * t.elements.size() + static_cast<Index>(b)];
}

int PermutationGroup::inverse(int a) const { return tables().inv[static_cast<Index>(a)]; }

int PermutationGroup::element_order(int x) const {
  return tables().classes.element_orders[static_cast<Index>(x)];
}

int PermutationGroup::power(int x, long long k) const {
  const long long ord = element_order(x);
  const long long e = ((k % ord) + ord) % ord;
  int r = 0;
  for (long long i = 0; i < e; ++i) r = multiply(x, r);
  return r;
}

int PermutationGroup::index_of(const Permutation& p) const {
  const auto& idx = tables().index;
  auto it = idx.find(p);
  return it == idx.end() ? -1 : it->second;
}

const ClassData& class_data(const PermutationGroup& g) { return g.classes(); }

int power_class(const PermutationGroup& g, int cls, long long k) {
  const ClassData& cd = g.classes();
  return cd.class_of[static_cast<Index>(g.power(cd.representative(cls), k))];
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::PadicRational: return "Q_" + std::to_string(p);
    case FieldKind::FiniteField: return "F_" + std::to_string(p);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Realizations

namespace {

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  const int da = a.degree();
  const int n = da + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    Permutation p = identity(n);
    std::copy(g.begin(), g.end(), p.begin());
    gens.push_back(std::move(p));
  }
  for (const auto& g : b.generators()) {
    Permutation p = identity(n);
    for (Index i = 0; i < g.size(); ++i) p[static_cast<Index>(da) + i] = static_cast<std::uint8_t>(g[i] + da);
    gens.push_back(std::move(p));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic2() { return PermutationGroup(2, {{1, 0}}); }

PermutationGroup dihedral_group(int n) {
  if (n == 1) return cyclic2();
  if (n == 2) return PermutationGroup(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  Permutation rot(static_cast<Index>(n)), refl(static_cast<Index>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<Index>(i)] = static_cast<std::uint8_t>((i + 1) % n);
    refl[static_cast<Index>(i)] = static_cast<std::uint8_t>((n - i) % n);
  }
  return PermutationGroup(n, {rot, refl});
}

PermutationGroup symmetric4() { return PermutationGroup(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }

// Generated by the 3-cycles (0 1 2) and (2 3 4).
PermutationGroup alternating5() { return PermutationGroup(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}}); }

}  // namespace

PermutationGroup realize(const FiniteGroupType& t) {
  using K = FiniteGroupType::Kind;
  switch (t.kind()) {
    case K::Trivial: return PermutationGroup(1, {});
    case K::C2: return cyclic2();
    case K::Dihedral: return dihedral_group(t.param());
    case K::C2xDihedral: return direct_product(cyclic2(), dihedral_group(t.param()));
    case K::ElemAbelian2: {
      if (t.param() == 0) return PermutationGroup(1, {});
      PermutationGroup g = cyclic2();
      for (int i = 1; i < t.param(); ++i) g = direct_product(g, cyclic2());
      return g;
    }
    case K::S4: return symmetric4();
    case K::C2xS4: return direct_product(cyclic2(), symmetric4());
    case K::A5: return alternating5();
    case K::C2xA5: return direct_product(cyclic2(), alternating5());
  }
  fail(ErrorCode::UnknownType, "no realization for " + t.name());
}

// ---------------------------------------------------------------------------
// Rank counts

int count_r(const PermutationGroup& g) { return class_orbits(g, {-1}, all_classes(g)); }

int count_q(const PermutationGroup& g) {
  const auto n = static_cast<int>(g.order());
  std::set<std::vector<int>> subgroups;
  for (int x = 0; x < n; ++x) {
    std::vector<int> h;
    for (int k = 0; k < g.element_order(x); ++k) h.push_back(g.power(x, k));
    std::sort(h.begin(), h.end());
    subgroups.insert(std::move(h));
  }
  std::set<std::vector<int>> up_to_conjugacy;
  for (const auto& h : subgroups) {
    std::vector<int> best;
    for (int c = 0; c < n; ++c) {
      std::vector<int> conj;
      conj.reserve(h.size());
      for (int y : h) conj.push_back(g.multiply(g.multiply(c, y), g.inverse(c)));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    up_to_conjugacy.insert(std::move(best));
  }
  return static_cast<int>(up_to_conjugacy.size());
}

int wh_rank(const PermutationGroup& g) { return count_r(g) - count_q(g); }

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<int>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

int k_classes(const PermutationGroup& g, const FieldDescriptor& f) {
  const int exp = g.classes().exponent;
  switch (f.kind) {
    case FieldKind::Rational: {
      auto u = units_mod(exp);
      return class_orbits(g, {u.begin(), u.end()}, all_classes(g));
    }
    case FieldKind::PadicRational: {
      require_prime(f.p);
      // exp = p^a * m with gcd(p, m) = 1. The Galois group of Q_p(zeta_exp)
      // is all units mod p^a times the Frobenius powers of p mod m.
      int m = exp;
      while (m % f.p == 0) m /= f.p;
      std::set<int> frobenius;
      long long q = 1 % m;
      for (int i = 0; i <= m; ++i, q = (q * f.p) % m) frobenius.insert(static_cast<int>(q));
      std::vector<long long> galois;
      for (long long u : units_mod(exp))
        if (m == 1 || frobenius.count(static_cast<int>(u % m))) galois.push_back(u);
      return class_orbits(g, galois, all_classes(g));
    }
    case FieldKind::FiniteField: {
      require_prime(f.p);
      const ClassData& cd = g.classes();
      std::vector<bool> regular(cd.class_count());
      for (std::size_t c = 0; c < cd.class_count(); ++c)
        regular[c] = cd.class_order(static_cast<int>(c)) % f.p != 0;
      return class_orbits(g, {f.p}, regular);
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown field kind");
}

int carter_k_minus1_rank(const PermutationGroup& g) {
  int rank = 1 - k_classes(g, FieldDescriptor::rational());
  for (int p : prime_divisors(g.order()))
    rank += k_classes(g, FieldDescriptor::padic(p)) - k_classes(g, FieldDescriptor::finite_field(p));
  return rank;
}

// ---------------------------------------------------------------------------
// Curated K-theory

KTheoryRecord ktheory_of(const FiniteGroupType& t) {
  using K = FiniteGroupType::Kind;
  const FiniteGroupType c = t.canonical();
  const auto known = catalog_finite_types();
  if (std::find(known.begin(), known.end(), c) == known.end())
    fail(ErrorCode::UnknownType, c.name() + " is not a stabilizer type of the catalog");
  KTheoryRecord r;
  r.source = "free ranks: Bass (Wh) and Carter (K_-1); torsion: tabulated";
  switch (c.kind()) {
    case K::Dihedral:
      if (c.param() == 5) r.wh = KValue::free(1);
      if (c.param() == 6) r.k_minus1 = KValue::free(1);
      if (c.param() == 10) {
        r.k_minus1 = KValue::free(1);
        r.wh = KValue::free(2);
      }
      break;
    case K::C2xDihedral:
      if (c.param() == 4) r.k0_tilde = KValue::cyclic(4);
      if (c.param() == 6) {
        r.k_minus1 = KValue::free(3);
        r.k0_tilde = KValue::cyclic(2, 2);
      }
      break;
    case K::C2xS4:
      r.k_minus1 = KValue::free(1);
      r.k0_tilde = KValue::cyclic(4);
      break;
    case K::A5:
      r.wh = KValue::free(1);
      break;
    case K::C2xA5:
      r.k_minus1 = KValue::free(1);
      r.wh = KValue::free(2);
      break;
    default:
      break;
  }
  return r;
}

std::vector<FiniteGroupType> ktheory_nonzero_types() {
  using F = FiniteGroupType;
  return {F::dihedral(5), F::dihedral(6),     F::c2_dihedral(4), F::dihedral(10),
          F::c2_dihedral(6), F::c2_s4(), F::a5(), F::c2_a5()};
}

std::vector<FiniteGroupType> catalog_finite_types() {
  using F = FiniteGroupType;
  return {F::trivial(),       F::c2(),         F::dihedral(2),    F::dihedral(3),
          F::dihedral(4),     F::dihedral(5),  F::dihedral(6),    F::dihedral(10),
          F::c2_dihedral(2),  F::c2_dihedral(4), F::c2_dihedral(6), F::s4(),
          F::c2_s4(),         F::a5(),         F::c2_a5()};
}

}  // namespace hypk
