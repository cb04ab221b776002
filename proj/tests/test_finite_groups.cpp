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
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include <doctest.h>

#include "hypk/error.hpp"
#include "hypk/finite_groups.hpp"
#include "oracles.hpp"

using namespace hypk;

namespace {

using FT = FiniteGroupType;

oracle::Group trivial_group() {
  return {1, 0, [](int, int) { return 0; }, [](int) { return 0; }};
}

// Independent model of each catalog type, built without the library.
oracle::Group model(const FT& t) {
  const FT c = t.canonical();
  switch (c.kind()) {
    case FT::Kind::Trivial: return trivial_group();
    case FT::Kind::C2: return oracle::times_c2(trivial_group());
    case FT::Kind::Dihedral: return oracle::arithmetic_dihedral(c.param());
    case FT::Kind::C2xDihedral: return oracle::times_c2(oracle::arithmetic_dihedral(c.param()));
    case FT::Kind::S4: return oracle::permutation_group({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4);
    case FT::Kind::C2xS4:
      return oracle::times_c2(oracle::permutation_group({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4));
    case FT::Kind::A5: return oracle::permutation_group({{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, 5);
    case FT::Kind::C2xA5:
      return oracle::times_c2(oracle::permutation_group({{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, 5));
    case FT::Kind::ElemAbelian2: break;
  }
  FAIL("no model for " << t.name());
  return trivial_group();
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

int exponent_of(const oracle::Group& g) {
  int e = 1;
  for (int x = 0; x < g.n; ++x) e = std::lcm(e, oracle::order_of(g, x));
  return e;
}

int power(const oracle::Group& g, int x, int k) {
  int y = g.identity;
  for (int i = 0; i < k; ++i) y = g.mul(y, x);
  return y;
}

// Orbits of `domain` under x -> c x^t c^-1 for every c in G and t in `units`.
int galois_orbits(const oracle::Group& g, const std::vector<int>& domain, const std::vector<int>& units) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int x : domain)
    for (int t : units) {
      const int y = power(g, x, t);
      for (int c = 0; c < g.n; ++c) parent[static_cast<std::size_t>(find(oracle::conj(g, c, y)))] = find(x);
    }
  std::set<int> roots;
  for (int x : domain) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

std::vector<int> all_elements(const oracle::Group& g) {
  std::vector<int> v(static_cast<std::size_t>(g.n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int oracle_rational(const oracle::Group& g) {
  const int e = exponent_of(g);
  std::vector<int> units;
  for (int t = 1; t <= e; ++t)
    if (gcd_int(t, e) == 1) units.push_back(t);
  return galois_orbits(g, all_elements(g), units);
}

int oracle_padic(const oracle::Group& g, int p) {
  const int e = exponent_of(g);
  int m = e;
  while (m % p == 0) m /= p;
  std::set<int> frob;  // powers of p modulo m
  for (int f = 1 % m, i = 0; i < m + 1; ++i, f = f * p % m) frob.insert(f);
  std::vector<int> units;
  for (int t = 1; t <= e; ++t)
    if (gcd_int(t, e) == 1 && frob.count(t % m)) units.push_back(t);
  return galois_orbits(g, all_elements(g), units);
}

int oracle_finite_field(const oracle::Group& g, int p) {
  std::vector<int> regular;
  for (int x = 0; x < g.n; ++x)
    if (oracle::order_of(g, x) % p != 0) regular.push_back(x);
  const int e = exponent_of(g);
  std::vector<int> units;
  for (int f = 1, i = 0; i < e + 1; ++i, f = f * p % e) units.push_back(f == 0 ? e : f);
  return galois_orbits(g, regular, units);
}

int oracle_carter(const oracle::Group& g) {
  int rank = 1 - oracle_rational(g);
  for (int p = 2; p <= g.n; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime && g.n % p == 0) rank += oracle_padic(g, p) - oracle_finite_field(g, p);
  }
  return rank;
}

std::optional<FT> times_c2(const FT& t) {
  const FT c = t.canonical();
  switch (c.kind()) {
    case FT::Kind::Trivial: return FT::c2();
    case FT::Kind::C2: return FT::dihedral(2);
    case FT::Kind::Dihedral: return FT::c2_dihedral(c.param()).canonical();
    case FT::Kind::S4: return FT::c2_s4();
    case FT::Kind::A5: return FT::c2_a5();
    default: return std::nullopt;
  }
}

int wh(const FT& t) { return wh_rank(realize(t)); }
int carter(const FT& t) { return carter_k_minus1_rank(realize(t)); }

}  // namespace

TEST_CASE("realizations have the tagged order and degree") {
  CHECK(realize(FT::dihedral(5)).degree() == 5);
  CHECK(realize(FT::dihedral(5)).order() == 10);
  CHECK(realize(FT::c2_a5()).degree() == 7);
  CHECK(realize(FT::c2_a5()).order() == 120);
  CHECK(realize(FT::trivial()).degree() == 1);
  CHECK(realize(FT::trivial()).order() == 1);
  CHECK(realize(FT::dihedral(2)).degree() == 4);
  for (const auto& t : catalog_finite_types()) {
    CAPTURE(t.name());
    const auto g = realize(t);
    CHECK(g.order() == t.order());
    CHECK(g.order() <= 120);
    CHECK(static_cast<int>(g.order()) == model(t).n);
  }
}

TEST_CASE("element list is closed under products and inverses") {
  for (const auto& t : catalog_finite_types()) {
    const auto g = realize(t);
    const int n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      for (int b = 0; b < n; ++b) {
        const int ab = g.multiply(a, b);
        REQUIRE(ab >= 0);
        REQUIRE(ab < n);
      }
    }
  }
}

TEST_CASE("class data is a partition with class sizes dividing |G|") {
  for (const auto& t : catalog_finite_types()) {
    const auto g = realize(t);
    const auto& cd = class_data(g);
    std::size_t total = 0;
    for (const auto& cls : cd.classes) {
      total += cls.size();
      CHECK(g.order() % cls.size() == 0);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("r and q examples") {
  CHECK(count_r(realize(FT::dihedral(5))) == 4);
  CHECK(count_q(realize(FT::dihedral(5))) == 3);
  CHECK(count_r(realize(FT::dihedral(10))) == 8);
  CHECK(count_q(realize(FT::dihedral(10))) == 6);
  CHECK(count_q(realize(FT::a5())) == 4);
  CHECK(count_r(realize(FT::trivial())) == 1);
  CHECK(count_q(realize(FT::trivial())) == 1);
}

TEST_CASE("r and q agree with Burnside counts on independent models") {
  for (const auto& t : catalog_finite_types()) {
    CAPTURE(t.name());
    const auto g = realize(t);
    const auto m = model(t);
    CHECK(count_r(g) == oracle::burnside_r(m));
    CHECK(count_q(g) == oracle::burnside_q(m));
    CHECK(count_r(g) >= count_q(g));
  }
  for (int n = 2; n <= 12; ++n) {
    const auto m = oracle::arithmetic_dihedral(n);
    const auto g = realize(FT::dihedral(n));
    CAPTURE(n);
    CHECK(count_r(g) == oracle::burnside_r(m));
    CHECK(count_q(g) == oracle::burnside_q(m));
  }
}

TEST_CASE("Whitehead ranks") {
  CHECK(wh(FT::dihedral(5)) == 1);
  CHECK(wh(FT::dihedral(10)) == 2);
  CHECK(wh(FT::a5()) == 1);
  CHECK(wh(FT::dihedral(6)) == 0);
  CHECK(wh(FT::c2_a5()) == 2);
  CHECK(wh(FT::c2_s4()) == 0);
  CHECK(wh(FT::c2_dihedral(6)) == 0);
}

TEST_CASE("component counts") {
  CHECK(k_classes(realize(FT::dihedral(5)), FieldDescriptor::finite_field(2)) == 2);
  CHECK(k_classes(realize(FT::c2_dihedral(6)), FieldDescriptor::finite_field(3)) == 8);
  CHECK(k_classes(realize(FT::trivial()), FieldDescriptor::rational()) == 1);
  CHECK(k_classes(realize(FT::dihedral(10)), FieldDescriptor::rational()) == 6);
  CHECK_THROWS_AS(k_classes(realize(FT::dihedral(5)), FieldDescriptor::padic(4)), Error);
  try {
    k_classes(realize(FT::dihedral(5)), FieldDescriptor::finite_field(9));
    FAIL("expected NonPrimeP");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrimeP);
  }
}

TEST_CASE("component counts agree with the Galois-orbit oracle") {
  for (const auto& t : catalog_finite_types()) {
    CAPTURE(t.name());
    const auto g = realize(t);
    const auto m = model(t);
    const int kq = k_classes(g, FieldDescriptor::rational());
    CHECK(kq == oracle_rational(m));
    CHECK(kq == count_q(g));
    for (int p : prime_divisors(g.order())) {
      CAPTURE(p);
      CHECK(k_classes(g, FieldDescriptor::padic(p)) == oracle_padic(m, p));
      CHECK(k_classes(g, FieldDescriptor::finite_field(p)) == oracle_finite_field(m, p));
      CHECK(k_classes(g, FieldDescriptor::padic(p)) >= kq);
    }
  }
}

TEST_CASE("Carter ranks") {
  CHECK(carter(FT::dihedral(5)) == 0);
  CHECK(carter(FT::dihedral(10)) == 1);
  CHECK(carter(FT::dihedral(6)) == 1);
  CHECK(carter(FT::c2_dihedral(6)) == 3);
  CHECK(carter(FT::c2_s4()) == 1);
  CHECK(carter(FT::dihedral(4)) == 0);
  CHECK(carter(FT::c2_dihedral(2)) == 0);
  for (const auto& t : catalog_finite_types()) {
    CAPTURE(t.name());
    const int c = carter(t);
    CHECK(c >= 0);
    CHECK(c == oracle_carter(model(t)));
  }
}

TEST_CASE("curated records agree with the rank oracles") {
  for (const auto& t : catalog_finite_types()) {
    CAPTURE(t.name());
    const auto rec = ktheory_of(t);
    CHECK(rec.k_below_minus1.is_zero());
    CHECK(rec.wh.free_rank == static_cast<std::uint64_t>(wh(t)));
    CHECK(rec.k_minus1.free_rank == static_cast<std::uint64_t>(carter(t)));
  }
}

TEST_CASE("curated records") {
  const auto c2s4 = ktheory_of(FT::c2_s4());
  CHECK(c2s4.k_minus1 == KValue::free(1));
  CHECK(c2s4.k0_tilde == KValue::cyclic(4));
  CHECK(c2s4.wh.is_zero());
  const auto d3 = ktheory_of(FT::dihedral(3));
  CHECK(d3.wh.is_zero());
  CHECK(d3.k0_tilde.is_zero());
  CHECK(d3.k_minus1.is_zero());
  const auto c2d6 = ktheory_of(FT::c2_dihedral(6));
  CHECK(c2d6.k_minus1 == KValue::free(3));
  CHECK(c2d6.k0_tilde == KValue::cyclic(2, 2));
  CHECK(c2d6.wh.is_zero());
  CHECK(ktheory_of(FT::c2_dihedral(4)).k0_tilde == KValue::cyclic(4));
  CHECK(ktheory_of(FT::dihedral(5)).wh == KValue::free(1));
  CHECK(ktheory_of(FT::dihedral(6)).k_minus1 == KValue::free(1));
  CHECK(ktheory_of(FT::dihedral(10)).wh == KValue::free(2));
  CHECK(ktheory_of(FT::dihedral(10)).k_minus1 == KValue::free(1));
  CHECK(ktheory_of(FT::c2_a5()).wh == KValue::free(2));
  CHECK(ktheory_of(FT::s4()).wh.is_zero());
  CHECK(ktheory_of(FT::elem_abelian2(3)).k0_tilde.is_zero());
  CHECK_THROWS_AS(ktheory_of(FT::dihedral(7)), Error);
}

TEST_CASE("Whitehead rank doubles under products with Z/2") {
  const auto types = catalog_finite_types();
  int pairs = 0;
  for (const auto& t : types) {
    const auto d = times_c2(t);
    if (!d || std::find(types.begin(), types.end(), *d) == types.end()) continue;
    CAPTURE(t.name());
    CHECK(wh(*d) == 2 * wh(t));
    ++pairs;
  }
  CHECK(pairs >= 5);
}

TEST_CASE("concurrent first use of a group computes identical tables") {
  const auto g = realize(FT::c2_a5());
  std::vector<int> r(8), q(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < 8; ++i)
    pool.emplace_back([&, i] {
      r[i] = count_r(g);
      q[i] = count_q(g);
    });
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r[i] == r[0]);
    CHECK(q[i] == q[0]);
  }
  CHECK(r[0] - q[0] == 2);
}
