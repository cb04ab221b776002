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
#include "hypk/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "hypk/error.hpp"
#include "hypk/finite_groups.hpp"
#include "hypk/geodesics.hpp"

namespace hypk {

namespace {

using nlohmann::json;

json kvalue_json(const KValue& v) {
  return json{{"free", v.free_rank}, {"torsion", v.torsion}, {"inf_z2", v.inf_z2}, {"nil0", v.nil0},
              {"nil1", v.nil1}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string form_name(VertexForm f) { return f == VertexForm::ProductC2 ? "product" : "doubled"; }

const char* table_title(int which) {
  switch (which) {
    case 1: return "Edge behavior at finite vertex groups";
    case 2: return "Type I stabilizers, cocompact groups";
    case 3: return "Type I stabilizers and cusps, one ideal vertex";
    case 4: return "Type I stabilizers and cusps, two ideal vertices";
    case 5: return "Lower K-theory of finite stabilizers";
    case 6: return "Lower K-theory, cocompact groups";
    case 7: return "Lower K-theory, non-cocompact groups";
    default: return "";
  }
}

std::string table1() {
  std::ostringstream os;
  os << "vertex | label | behavior\n";
  for (const auto& [key, b] : EdgeBehaviorTable::standard().rows()) {
    os << key.first.name() << " | pi/" << key.second << " | ";
    if (b.extends)
      os << (b.pairing == Pairing::Swap ? "extends (swap)" : "extends (self-paired)");
    else
      os << "reflects (" << form_name(b.form) << ")";
    os << '\n';
  }
  return os.str();
}

std::string table5(bool recomputed) {
  std::ostringstream os;
  if (recomputed) {
    os << "group | order | r | q | rank Wh | rank K-1\n";
    for (const auto& t : ktheory_nonzero_types()) {
      const PermutationGroup g = realize(t);
      os << t.name() << " | " << g.order() << " | " << count_r(g) << " | " << count_q(g) << " | " << wh_rank(g)
         << " | " << carter_k_minus1_rank(g) << '\n';
    }
  } else {
    os << "group | K-1 | K0t | Wh\n";
    for (const auto& t : ktheory_nonzero_types()) {
      const KTheoryRecord r = ktheory_of(t);
      os << t.name() << " | " << r.k_minus1.render() << " | " << r.k0_tilde.render() << " | " << r.wh.render()
         << '\n';
    }
  }
  return os.str();
}

std::string stabilizer_table(int ideal, bool recomputed) {
  std::ostringstream os;
  os << "group | stabilizers" << (ideal > 0 ? " | cusps" : "") << '\n';
  for (const auto& e : catalog()) {
    if (e.ideal_vertices != ideal) continue;
    std::vector<std::string> stabs = e.expected_stabilizers;
    std::string cusps = e.expected_cusps ? format_multiset(*e.expected_cusps) : "*";
    if (recomputed) {
      const CoxeterDiagram d{e.name, e.matrix};
      stabs.clear();
      for (const auto& s : enumerate_type1(d)) stabs.push_back(s.render());
      std::sort(stabs.begin(), stabs.end());
      cusps = render_cusp_list(cusp_groups(d));
    }
    os << e.name << " | " << format_multiset(stabs);
    if (ideal > 0) os << " | " << cusps;
    os << '\n';
  }
  return os.str();
}

std::string ktable(bool cocompact, bool recomputed) {
  std::ostringstream os;
  os << "group | K-1 | K0t | Wh\n";
  for (const auto& e : catalog()) {
    if ((e.ideal_vertices == 0) != cocompact) continue;
    KValue km1 = e.expected_km1, k0 = e.expected_k0t, wh = e.expected_wh;
    if (recomputed) {
      KGroups k = assemble({e.name, e.matrix});
      km1 = k[kDegreeKm1];
      k0 = k[kDegreeK0];
      wh = k[kDegreeWh];
    }
    os << e.name << " | " << km1.render() << " | " << k0.render() << " | " << wh.render() << '\n';
  }
  return os.str();
}

}  // namespace

std::string display_name(const CoxeterDiagram& d) {
  if (d.name) return *d.name;
  std::ostringstream os;
  os << "matrix(";
  for (std::size_t i = 0; i < d.matrix.entries().size(); ++i) os << (i ? "," : "") << d.matrix.entries()[i];
  os << ')';
  return os.str();
}

std::string format_kgroups(const std::string& group, const KGroups& k, OutputFormat fmt, bool normalized) {
  auto value = [&](int n) {
    auto it = k.find(n);
    const KValue v = it == k.end() ? KValue::zero() : it->second;
    return normalized ? v.normalized() : v;
  };
  const KValue wh = value(kDegreeWh), k0 = value(kDegreeK0), km1 = value(kDegreeKm1), below = value(kDegreeBelow);
  switch (fmt) {
    case OutputFormat::Json: {
      json j{{"group", group},
             {"Wh", kvalue_json(wh)},
             {"K0t", kvalue_json(k0)},
             {"Km1", kvalue_json(km1)},
             {"Kbelow", kvalue_json(below)}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return "group,Wh,K0t,Km1,Kbelow\n" + csv_quote(group) + "," + csv_quote(wh.render(false)) + "," +
             csv_quote(k0.render(false)) + "," + csv_quote(km1.render(false)) + "," +
             csv_quote(below.render(false)) + "\n";
    case OutputFormat::Text:
      break;
  }
  return "Wh = " + wh.render(false) + "; K0t = " + k0.render(false) + "; Km1 = " + km1.render(false) +
         "; K<=-2 = " + below.render(false) + "\n";
}

std::string format_stabilizers(const CoxeterDiagram& diagram, OutputFormat fmt) {
  const auto stabs = enumerate_type1(diagram);
  const auto cusps = cusp_groups(diagram);
  switch (fmt) {
    case OutputFormat::Json: {
      json list = json::array();
      for (const auto& s : stabs)
        list.push_back({{"stabilizer", s.render()},
                        {"tag", s.tag_name()},
                        {"edge_group", "D_" + std::to_string(s.k)},
                        {"left", form_name(s.left)},
                        {"right", form_name(s.right)}});
      json c = json::array();
      for (auto x : cusps) c.push_back(std::string(cusp_name(x)));
      return json{{"group", display_name(diagram)}, {"stabilizers", list}, {"cusps", c}}.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "group,stabilizer,tag\n";
      for (const auto& s : stabs)
        out += csv_quote(display_name(diagram)) + "," + csv_quote(s.render()) + "," + csv_quote(s.tag_name()) + "\n";
      for (auto x : cusps)
        out += csv_quote(display_name(diagram)) + "," + csv_quote("cusp " + std::string(cusp_name(x))) + ",cusp\n";
      return out;
    }
    case OutputFormat::Text:
      break;
  }
  std::string out;
  for (const auto& s : stabs) out += s.render() + "\t" + s.tag_name() + "\n";
  out += "cusps: " + render_cusp_list(cusps) + "\n";
  return out;
}

std::string format_oracle(const FiniteGroupType& t) {
  const PermutationGroup g = realize(t);
  json fields = json::object();
  fields["Q"] = k_classes(g, FieldDescriptor::rational());
  for (int p : prime_divisors(g.order())) {
    fields["Q_" + std::to_string(p)] = k_classes(g, FieldDescriptor::padic(p));
    fields["F_" + std::to_string(p)] = k_classes(g, FieldDescriptor::finite_field(p));
  }
  const KTheoryRecord rec = ktheory_of(t);
  json j{{"type", t.name()},
         {"order", g.order()},
         {"degree", g.degree()},
         {"classes", class_data(g).class_count()},
         {"r", count_r(g)},
         {"q", count_q(g)},
         {"wh_rank", wh_rank(g)},
         {"k_classes", fields},
         {"carter_k_minus1_rank", carter_k_minus1_rank(g)},
         {"tabulated", {{"Wh", rec.wh.render()}, {"K0t", rec.k0_tilde.render()}, {"Km1", rec.k_minus1.render()}}}};
  return j.dump(2) + "\n";
}

std::string format_verify(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << (e.pass ? "PASS " : "FAIL ") << e.name;
    if (!e.pass) os << ": " << e.first_mismatch;
    os << '\n';
  }
  os << report.passed << '/' << report.total << " pass\n";
  return os.str();
}

std::string format_table(int which, bool recomputed) {
  std::string body;
  switch (which) {
    case 1: body = table1(); break;
    case 2: body = stabilizer_table(0, recomputed); break;
    case 3: body = stabilizer_table(1, recomputed); break;
    case 4: body = stabilizer_table(2, recomputed); break;
    case 5: body = table5(recomputed); break;
    case 6: body = ktable(true, recomputed); break;
    case 7: body = ktable(false, recomputed); break;
    default: fail(ErrorCode::InvalidArgument, "table number must be between 1 and 7");
  }
  return "# Table " + std::to_string(which) + ": " + table_title(which) + (recomputed ? " (recomputed)" : "") +
         "\n" + body;
}

std::string format_list() {
  std::ostringstream os;
  for (int ideal = 0; ideal <= 4; ++ideal) {
    os << ideal << " ideal vertices:";
    for (const auto& e : catalog())
      if (e.ideal_vertices == ideal) os << ' ' << e.name;
    os << '\n';
  }
  return os.str();
}

}  // namespace hypk
