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
#include <cctype>
#include <fstream>
#include <sstream>

#include "hypk/coxeter.hpp"
#include "hypk/error.hpp"

namespace hypk {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6) return false;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroupType

FiniteGroupType FiniteGroupType::dihedral(int n) {
  if (n < 1) fail(ErrorCode::UnknownType, "dihedral group needs n >= 1");
  return {Kind::Dihedral, n};
}

FiniteGroupType FiniteGroupType::c2_dihedral(int n) {
  if (n < 1) fail(ErrorCode::UnknownType, "dihedral group needs n >= 1");
  return {Kind::C2xDihedral, n};
}

FiniteGroupType FiniteGroupType::elem_abelian2(int k) {
  if (k < 0 || k > 3) fail(ErrorCode::UnknownType, "elementary abelian 2-group rank must be <= 3");
  return {Kind::ElemAbelian2, k};
}

FiniteGroupType FiniteGroupType::canonical() const {
  switch (kind_) {
    case Kind::Dihedral:
      return param_ == 1 ? c2() : *this;
    case Kind::C2xDihedral:
      if (param_ == 1) return dihedral(2);
      return param_ % 2 == 1 ? dihedral(2 * param_) : *this;
    case Kind::ElemAbelian2:
      switch (param_) {
        case 0: return trivial();
        case 1: return c2();
        case 2: return dihedral(2);
        default: return c2_dihedral(2);
      }
    default:
      return *this;
  }
}

std::uint64_t FiniteGroupType::order() const {
  switch (kind_) {
    case Kind::Trivial: return 1;
    case Kind::C2: return 2;
    case Kind::Dihedral: return 2ULL * static_cast<std::uint64_t>(param_);
    case Kind::C2xDihedral: return 4ULL * static_cast<std::uint64_t>(param_);
    case Kind::ElemAbelian2: return 1ULL << param_;
    case Kind::S4: return 24;
    case Kind::C2xS4: return 48;
    case Kind::A5: return 60;
    case Kind::C2xA5: return 120;
  }
  return 0;
}

std::string FiniteGroupType::name() const {
  const FiniteGroupType c = canonical();
  switch (c.kind_) {
    case Kind::Trivial: return "1";
    case Kind::C2: return "C2";
    case Kind::Dihedral: return "D_" + std::to_string(c.param_);
    case Kind::C2xDihedral: return "C2xD_" + std::to_string(c.param_);
    case Kind::ElemAbelian2: return "E2^" + std::to_string(c.param_);
    case Kind::S4: return "S4";
    case Kind::C2xS4: return "C2xS4";
    case Kind::A5: return "A5";
    case Kind::C2xA5: return "C2xA5";
  }
  return "?";
}

FiniteGroupType FiniteGroupType::parse(std::string_view text) {
  std::string s = strip(text);
  replace_all(s, "_", "");
  replace_all(s, "Z/2", "C2");
  replace_all(s, "Z2", "C2");
  replace_all(s, "×", "x");
  replace_all(s, "*", "x");
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "1" || lower == "trivial") return trivial();
  if (lower == "c2") return c2();
  if (lower == "s4") return s4();
  if (lower == "a5") return a5();
  if (lower == "c2xs4" || lower == "s4xc2") return c2_s4();
  if (lower == "c2xa5" || lower == "a5xc2") return c2_a5();
  int n = 0;
  if (lower.rfind("c2xd", 0) == 0 && parse_int(lower.substr(4), n) && n >= 1) return c2_dihedral(n);
  if (lower.size() > 4 && lower.substr(lower.size() - 3) == "xc2" && lower[0] == 'd' &&
      parse_int(lower.substr(1, lower.size() - 4), n) && n >= 1)
    return c2_dihedral(n);
  if (lower.rfind("d", 0) == 0 && parse_int(lower.substr(1), n) && n >= 1) return dihedral(n);
  if (lower.rfind("e2^", 0) == 0 && parse_int(lower.substr(3), n) && n <= 3) return elem_abelian2(n);
  if (lower.rfind("(c2)^", 0) == 0 && parse_int(lower.substr(5), n) && n <= 3) return elem_abelian2(n);
  fail(ErrorCode::UnknownType, "unknown finite group type '" + std::string(text) + "'");
}

std::string_view cusp_name(CuspType c) noexcept {
  switch (c) {
    case CuspType::Tri36: return "[3,6]";
    case CuspType::Square44: return "[4,4]";
    case CuspType::Tri333: return "[3^[3]]";
  }
  return "?";
}

std::string SubgroupClassification::describe() const {
  if (spherical()) return finite().name();
  return "affine " + std::string(cusp_name(cusp()));
}

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1 || entries_.size() != static_cast<std::size_t>(rank_ * rank_))
    fail(ErrorCode::MalformedNotation, "matrix size does not match rank");
  for (int i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 1) fail(ErrorCode::AsymmetricMatrix, "diagonal entries must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) < 2)
        fail(ErrorCode::MalformedNotation, "off-diagonal labels must be integers >= 2");
      if ((*this)(i, j) != (*this)(j, i))
        fail(ErrorCode::AsymmetricMatrix, "matrix is not symmetric");
    }
  }
}

namespace {

CoxeterMatrix from_edges(std::initializer_list<std::array<int, 3>> edges) {
  std::vector<int> e(16, 2);
  for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(i * 5)] = 1;
  for (const auto& [i, j, m] : edges) {
    e[static_cast<std::size_t>(i * 4 + j)] = m;
    e[static_cast<std::size_t>(j * 4 + i)] = m;
  }
  return CoxeterMatrix(4, std::move(e));
}

}  // namespace

CoxeterMatrix CoxeterMatrix::chain(int p, int q, int r) {
  return from_edges({{0, 1, p}, {1, 2, q}, {2, 3, r}});
}

CoxeterMatrix CoxeterMatrix::cycle(int a, int b, int c, int d) {
  return from_edges({{0, 1, a}, {1, 2, b}, {2, 3, c}, {0, 3, d}});
}

CoxeterMatrix CoxeterMatrix::restrict_to(const std::vector<int>& subset) const {
  const int k = static_cast<int>(subset.size());
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(k * k));
  for (int a : subset)
    for (int b : subset) e.push_back((*this)(a, b));
  return CoxeterMatrix(k, std::move(e));
}

std::string CoxeterMatrix::to_literal() const {
  std::ostringstream os;
  os << "rank " << rank_ << '\n';
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Registry
//
// Generator order: chains left to right, cycles in adjacency order, Y shapes
// trunk first (0 - 1 is the trunk, 1 is the branch point), triangles with a
// tail as 0 - 1 with triangle {1,2,3}.

namespace {

struct RegistryEntry {
  const char* name;
  CoxeterMatrix matrix;
};

CoxeterMatrix y_shape(int trunk, int b1, int b2) {
  return from_edges({{0, 1, trunk}, {1, 2, b1}, {1, 3, b2}});
}

CoxeterMatrix tailed_triangle(int tail) {
  return from_edges({{0, 1, tail}, {1, 2, 3}, {2, 3, 3}, {1, 3, 3}});
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      // cocompact
      {"[4,3,5]", CoxeterMatrix::chain(4, 3, 5)},
      {"[3,5,3]", CoxeterMatrix::chain(3, 5, 3)},
      {"[5,3^{1,1}]", y_shape(5, 3, 3)},
      {"[(3^3,4)]", CoxeterMatrix::cycle(3, 3, 3, 4)},
      {"[5,3,5]", CoxeterMatrix::chain(5, 3, 5)},
      {"[(3^3,5)]", CoxeterMatrix::cycle(3, 3, 3, 5)},
      {"[(3,4)^[2]]", CoxeterMatrix::cycle(3, 4, 3, 4)},
      {"[(3,4,3,5)]", CoxeterMatrix::cycle(3, 4, 3, 5)},
      {"[(3,5)^[2]]", CoxeterMatrix::cycle(3, 5, 3, 5)},
      // non-cocompact
      {"[(3^3,6)]", CoxeterMatrix::cycle(3, 3, 3, 6)},
      {"[(3,4,3,6)]", CoxeterMatrix::cycle(3, 4, 3, 6)},
      {"[(3,5,3,6)]", CoxeterMatrix::cycle(3, 5, 3, 6)},
      {"[(3,6)^[2]]", CoxeterMatrix::cycle(3, 6, 3, 6)},
      {"[5,3,6]", CoxeterMatrix::chain(5, 3, 6)},
      {"[6,3,6]", CoxeterMatrix::chain(6, 3, 6)},
      {"[3,3,6]", CoxeterMatrix::chain(3, 3, 6)},
      {"[4,3,6]", CoxeterMatrix::chain(4, 3, 6)},
      {"[3,3^[3]]", tailed_triangle(3)},
      {"[3,6,3]", CoxeterMatrix::chain(3, 6, 3)},
      {"[6,3^{1,1}]", y_shape(6, 3, 3)},
      {"[4,3^[3]]", tailed_triangle(4)},
      {"[5,3^[3]]", tailed_triangle(5)},
      {"[6,3^[3]]", tailed_triangle(6)},
      {"[(3^2,4^2)]", CoxeterMatrix::cycle(3, 3, 4, 4)},
      {"[(3,4^3)]", CoxeterMatrix::cycle(3, 4, 4, 4)},
      {"[4^[4]]", CoxeterMatrix::cycle(4, 4, 4, 4)},
      {"[3,4^{1,1}]", y_shape(3, 4, 4)},
      {"[3,4,4]", CoxeterMatrix::chain(3, 4, 4)},
      {"[4,4,4]", CoxeterMatrix::chain(4, 4, 4)},
      {"[4^{1,1,1}]", y_shape(4, 4, 4)},
      // 4-cycle 0-1-2-3-0 with chord 0-2; 1 and 3 commute
      {"[3^[3,3]]", from_edges({{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 3, 3}, {0, 2, 3}})},
      // complete graph on four vertices
      {"[3^[]x[]]",
       from_edges({{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {1, 2, 3}, {1, 3, 3}, {2, 3, 3}})},
  };
  return entries;
}

// Spellings used in running text that differ from the figure captions.
const std::vector<std::pair<std::string, std::string>>& aliases() {
  static const std::vector<std::pair<std::string, std::string>> a = {
      {"[3^2,4^2]", "[(3^2,4^2)]"},
      {"[(3,4)^[2]", "[(3,4)^[2]]"},
  };
  return a;
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.emplace_back(e.name);
    return n;
  }();
  return names;
}

std::string normalize_name(std::string_view text) {
  std::string s = strip(text);
  replace_all(s, "\\,", "");
  replace_all(s, "\\times", "x");
  replace_all(s, "×", "x");
  replace_all(s, "\\hskip2pt", "");
  replace_all(s, "\\", "");
  // ^{[...]} -> ^[...]
  for (std::size_t pos = 0; (pos = s.find("^{[", pos)) != std::string::npos;) {
    // find the matching "]}" for this group, allowing nested [] inside
    int depth = 0;
    std::size_t end = std::string::npos;
    for (std::size_t i = pos + 2; i < s.size(); ++i) {
      if (s[i] == '[') ++depth;
      if (s[i] == ']') {
        --depth;
        if (depth == 0 && i + 1 < s.size() && s[i + 1] == '}') {
          end = i + 1;
          break;
        }
      }
    }
    if (end == std::string::npos) break;
    s.erase(end, 1);
    s.erase(pos + 1, 1);
  }
  for (const auto& [from, to] : aliases())
    if (s == from) return to;
  return s;
}

std::optional<CoxeterMatrix> registry_matrix(std::string_view name) {
  const std::string n = normalize_name(name);
  for (const auto& e : registry())
    if (n == e.name) return e.matrix;
  return std::nullopt;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_labels(const std::string& body, std::string_view original) {
  std::vector<int> labels;
  for (const auto& part : split(body, ',')) {
    int v = 0;
    if (!parse_int(part, v))
      fail(ErrorCode::MalformedNotation, "bad label '" + part + "' in '" + std::string(original) + "'");
    if (v < 2)
      fail(ErrorCode::MalformedNotation, "labels must be >= 2 in '" + std::string(original) + "'");
    labels.push_back(v);
  }
  return labels;
}

bool all_numeric_list(const std::string& body) {
  if (body.empty()) return false;
  for (char c : body)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',') return false;
  return true;
}

CoxeterMatrix parse_literal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  int rank = 0;
  if (!(in >> word) || word != "rank" || !(in >> rank) || rank < 1 || rank > 16)
    fail(ErrorCode::MalformedNotation, "raw matrix must start with 'rank N'");
  std::vector<int> entries;
  std::string tok;
  while (in >> tok) {
    int v = 0;
    if (!parse_int(tok, v)) fail(ErrorCode::MalformedNotation, "bad matrix entry '" + tok + "'");
    entries.push_back(v);
  }
  if (entries.size() != static_cast<std::size_t>(rank * rank))
    fail(ErrorCode::MalformedNotation, "expected " + std::to_string(rank * rank) + " matrix entries");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const int v = entries[static_cast<std::size_t>(i * rank + j)];
      if (i != j && v < 2) fail(ErrorCode::MalformedNotation, "off-diagonal labels must be >= 2");
    }
  return CoxeterMatrix(rank, std::move(entries));
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  const std::string trimmed = [&] {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
  }();
  if (trimmed.rfind("rank", 0) == 0) {
    CoxeterMatrix m = parse_literal(trimmed);
    if (m.rank() != 4) fail(ErrorCode::MalformedNotation, "only rank-4 diagrams are supported");
    return {std::nullopt, std::move(m)};
  }
  const std::string n = normalize_name(trimmed);
  if (auto m = registry_matrix(n)) return {n, *m};

  if (n.size() >= 2 && n.front() == '[' && n.back() == ']') {
    std::string body = n.substr(1, n.size() - 2);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
      std::string inner = body.substr(1, body.size() - 2);
      if (all_numeric_list(inner)) {
        auto l = parse_labels(inner, text);
        if (l.size() != 4) fail(ErrorCode::MalformedNotation, "cycle notation needs 4 labels");
        return {n, CoxeterMatrix::cycle(l[0], l[1], l[2], l[3])};
      }
    } else if (all_numeric_list(body)) {
      auto l = parse_labels(body, text);
      if (l.size() != 3) fail(ErrorCode::MalformedNotation, "chain notation needs 3 labels");
      return {n, CoxeterMatrix::chain(l[0], l[1], l[2])};
    }
  }
  fail(ErrorCode::UnknownName, "unknown diagram '" + std::string(text) + "'");
}

CoxeterDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  CoxeterDiagram d = parse_diagram(buf.str());
  return d;
}

// ---------------------------------------------------------------------------
// Special subgroups and classification

std::vector<SpecialSubgroup> special_subgroups(const CoxeterDiagram& diagram, int k) {
  const int n = diagram.matrix.rank();
  if (k < 1 || k > n) fail(ErrorCode::InvalidArgument, "subgroup size out of range");
  std::vector<SpecialSubgroup> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back({idx, diagram.matrix.restrict_to(idx)});
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

SubgroupClassification classify_rank3(int a, int b, int c) {
  std::array<int, 3> l{a, b, c};
  std::sort(l.begin(), l.end(), std::greater<>());
  const auto is = [&](int x, int y, int z) { return l == std::array<int, 3>{x, y, z}; };
  if (is(2, 2, 2)) return {FiniteGroupType::elem_abelian2(3)};
  if (l[1] == 2 && l[2] == 2) return {FiniteGroupType::c2_dihedral(l[0])};
  if (is(3, 3, 2)) return {FiniteGroupType::s4()};
  if (is(4, 3, 2)) return {FiniteGroupType::c2_s4()};
  if (is(5, 3, 2)) return {FiniteGroupType::c2_a5()};
  if (is(3, 3, 3)) return {CuspType::Tri333};
  if (is(4, 4, 2)) return {CuspType::Square44};
  if (is(6, 3, 2)) return {CuspType::Tri36};
  std::ostringstream os;
  os << "label multiset {" << l[0] << "," << l[1] << "," << l[2] << "} is neither spherical nor affine";
  fail(ErrorCode::UnclassifiableRank3, os.str());
}

SubgroupClassification classify_rank3(const SpecialSubgroup& sub) {
  if (sub.generators.size() != 3) fail(ErrorCode::InvalidArgument, "classify_rank3 needs 3 generators");
  const auto& m = sub.submatrix;
  return classify_rank3(m(0, 1), m(1, 2), m(0, 2));
}

FiniteGroupType classify_rank2(const SpecialSubgroup& sub) {
  if (sub.generators.size() != 2) fail(ErrorCode::InvalidArgument, "classify_rank2 needs 2 generators");
  return FiniteGroupType::dihedral(sub.submatrix(0, 1));
}

VertexProfile vertex_profile(const CoxeterDiagram& diagram) {
  if (diagram.matrix.rank() != 4) fail(ErrorCode::InvalidArgument, "vertex profile needs a rank-4 diagram");
  std::array<std::optional<SubgroupClassification>, 4> tmp;
  int ideal = 0;
  for (int v = 0; v < 4; ++v) {
    std::vector<int> g;
    for (int i = 0; i < 4; ++i)
      if (i != v) g.push_back(i);
    tmp[static_cast<std::size_t>(v)] = classify_rank3({g, diagram.matrix.restrict_to(g)});
    if (!tmp[static_cast<std::size_t>(v)]->spherical()) ++ideal;
  }
  return {{*tmp[0], *tmp[1], *tmp[2], *tmp[3]}, ideal};
}

}  // namespace hypk
