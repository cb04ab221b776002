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
#include "hypk/kvalue.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hypk/error.hpp"

namespace hypk {

KValue KValue::free(std::uint64_t rank) {
  KValue v;
  v.free_rank = rank;
  return v;
}

KValue KValue::cyclic(std::uint64_t order, std::uint64_t copies) {
  if (order < 2) fail(ErrorCode::InvalidArgument, "cyclic summand order must be >= 2");
  KValue v;
  v.torsion.assign(copies, order);
  return v;
}

KValue KValue::inf_z2_sum(std::uint64_t copies) {
  KValue v;
  v.inf_z2 = copies;
  return v;
}

KValue KValue::nil0_sym(std::uint64_t copies) {
  KValue v;
  v.nil0 = copies;
  return v;
}

KValue KValue::nil1_sym(std::uint64_t copies) {
  KValue v;
  v.nil1 = copies;
  return v;
}

bool KValue::is_zero() const noexcept {
  return free_rank == 0 && torsion.empty() && inf_z2 == 0 && nil0 == 0 && nil1 == 0;
}

std::uint64_t KValue::torsion_count(std::uint64_t order) const noexcept {
  return static_cast<std::uint64_t>(std::count(torsion.begin(), torsion.end(), order));
}

KValue KValue::normalized() const {
  KValue v = *this;
  v.inf_z2 = std::min<std::uint64_t>(v.inf_z2, 1);
  v.nil0 = std::min<std::uint64_t>(v.nil0, 1);
  v.nil1 = std::min<std::uint64_t>(v.nil1, 1);
  return v;
}

KValue& KValue::operator+=(const KValue& other) {
  free_rank += other.free_rank;
  torsion.insert(torsion.end(), other.torsion.begin(), other.torsion.end());
  std::sort(torsion.begin(), torsion.end());
  inf_z2 += other.inf_z2;
  nil0 += other.nil0;
  nil1 += other.nil1;
  return *this;
}

namespace {

void add_term(std::vector<std::string>& terms, const std::string& base, std::uint64_t count,
              bool wrap) {
  if (count == 0) return;
  if (count == 1) {
    terms.push_back(base);
  } else {
    terms.push_back((wrap ? "(" + base + ")" : base) + "^" + std::to_string(count));
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::uint64_t to_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::MalformedNotation, "bad number in K-value '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string KValue::render(bool normalize) const {
  const KValue v = normalize ? normalized() : *this;
  if (v.is_zero()) return "0";
  std::vector<std::string> terms;
  add_term(terms, "Z", v.free_rank, false);
  std::vector<std::uint64_t> orders = v.torsion;
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (auto d : orders) add_term(terms, "Z/" + std::to_string(d), v.torsion_count(d), true);
  add_term(terms, "infZ2", v.inf_z2, true);
  add_term(terms, "Nil0", v.nil0, true);
  add_term(terms, "Nil1", v.nil1, true);
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? " + " : "") << terms[i];
  return os.str();
}

KValue KValue::parse(std::string_view text) {
  const std::string whole = trim(text);
  if (whole == "0") return zero();
  if (whole.empty()) fail(ErrorCode::MalformedNotation, "empty K-value");
  KValue out;
  std::size_t start = 0;
  while (start <= whole.size()) {
    std::size_t plus = whole.find('+', start);
    if (plus == std::string::npos) plus = whole.size();
    std::string term = trim(std::string_view(whole).substr(start, plus - start));
    start = plus + 1;

    std::uint64_t count = 1;
    std::string base = term;
    if (auto caret = term.rfind('^'); caret != std::string::npos) {
      count = to_u64(std::string_view(term).substr(caret + 1), whole);
      base = term.substr(0, caret);
    }
    if (base.size() >= 2 && base.front() == '(' && base.back() == ')')
      base = base.substr(1, base.size() - 2);

    if (base == "Z") {
      out.free_rank += count;
    } else if (base.rfind("Z/", 0) == 0) {
      out += cyclic(to_u64(std::string_view(base).substr(2), whole), count);
    } else if (base == "infZ2") {
      out.inf_z2 += count;
    } else if (base == "Nil0") {
      out.nil0 += count;
    } else if (base == "Nil1") {
      out.nil1 += count;
    } else {
      fail(ErrorCode::MalformedNotation, "unknown K-value term '" + term + "'");
    }
    if (plus == whole.size()) break;
  }
  return out;
}

}  // namespace hypk
