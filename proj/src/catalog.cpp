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
#include "hypk/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <sstream>
#include <thread>

#include "hypk/error.hpp"

namespace hypk {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Splits on commas outside braces and parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '{' || c == '(' || c == '[') ++depth;
    if (c == '}' || c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(split_fields(t, '|'), lineno);
  }
}

const std::map<std::string, int>& multiplicity_words() {
  static const std::map<std::string, int> words = {{"twice", 2}, {"three times", 3}, {"four times", 4}};
  return words;
}

}  // namespace

std::vector<std::string> parse_multiset(std::string_view field) {
  const std::string f = trim(field);
  if (f == "-" || f.empty()) return {};
  std::vector<std::string> out;
  for (std::string item : split_top_level(f)) {
    int copies = 1;
    for (const auto& [word, n] : multiplicity_words()) {
      const std::string suffix = "(" + word + ")";
      if (item.size() > suffix.size() && item.compare(item.size() - suffix.size(), suffix.size(), suffix) == 0) {
        copies = n;
        item = trim(item.substr(0, item.size() - suffix.size()));
      }
    }
    out.insert(out.end(), static_cast<std::size_t>(copies), item);
  }
  return out;
}

std::string format_multiset(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::map<std::string, int> counts;
  std::vector<std::string> order;
  for (const auto& s : items)
    if (counts[s]++ == 0) order.push_back(s);
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i) {
    os << (i ? ", " : "") << order[i];
    const int c = counts[order[i]];
    if (c == 1) continue;
    auto it = std::find_if(multiplicity_words().begin(), multiplicity_words().end(),
                           [c](const auto& w) { return w.second == c; });
    if (it == multiplicity_words().end()) {
      for (int k = 1; k < c; ++k) os << ", " << order[i];
    } else {
      os << " (" << it->first << ")";
    }
  }
  return os.str();
}

std::vector<CatalogEntry> parse_golden_tables(std::string_view text) {
  std::vector<CatalogEntry> out;
  for_each_record(text, [&](const std::vector<std::string>& f, int lineno) {
    if (f.size() != 6)
      fail(ErrorCode::MalformedNotation, "golden table line " + std::to_string(lineno) + ": expected 6 fields");
    const CoxeterDiagram d = parse_diagram(f[0]);
    CatalogEntry e{f[0], d.matrix, vertex_profile(d).ideal_count, parse_multiset(f[1]), std::nullopt,
                   KValue::parse(f[3]), KValue::parse(f[4]), KValue::parse(f[5])};
    if (f[2] != "*") e.expected_cusps = parse_multiset(f[2]);
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<WorkedExample> parse_golden_examples(std::string_view text) {
  std::vector<WorkedExample> out;
  for_each_record(text, [&](const std::vector<std::string>& f, int lineno) {
    if (f.size() != 7)
      fail(ErrorCode::MalformedNotation, "worked example line " + std::to_string(lineno) + ": expected 7 fields");
    out.push_back({f[0], KValue::parse(f[1]), KValue::parse(f[2]), KValue::parse(f[3]), KValue::parse(f[4]),
                   KValue::parse(f[5]), KValue::parse(f[6])});
  });
  return out;
}

std::string format_golden_line(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.name << " | " << format_multiset(e.expected_stabilizers) << " | "
     << (e.expected_cusps ? format_multiset(*e.expected_cusps) : "*") << " | " << e.expected_km1.render()
     << " | " << e.expected_k0t.render() << " | " << e.expected_wh.render();
  return os.str();
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_golden_tables(golden_tables_text());
  return entries;
}

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> examples = parse_golden_examples(golden_examples_text());
  return examples;
}

const CatalogEntry& lookup(std::string_view name) {
  const std::string n = normalize_name(name);
  for (const auto& e : catalog())
    if (e.name == n) return e;
  fail(ErrorCode::UnknownName, "'" + std::string(name) + "' is not a catalog group");
}

std::string render_cusp_list(const std::vector<CuspType>& cusps) {
  std::vector<std::string> names;
  for (auto c : cusps) names.emplace_back(cusp_name(c));
  std::sort(names.begin(), names.end());
  return format_multiset(names);
}

std::string diff_entry(const CatalogEntry& e, const EdgeBehaviorTable& table) {
  const CoxeterDiagram d{e.name, e.matrix};
  std::vector<std::string> stabs;
  for (const auto& s : enumerate_type1(d, table)) stabs.push_back(s.render());
  std::vector<std::string> want = e.expected_stabilizers;
  std::sort(stabs.begin(), stabs.end());
  std::sort(want.begin(), want.end());
  if (stabs != want)
    return "stabilizers: expected {" + format_multiset(e.expected_stabilizers) + "}, got {" +
           format_multiset(stabs) + "}";

  if (e.expected_cusps) {
    std::vector<std::string> cusps;
    for (auto c : cusp_groups(d)) cusps.emplace_back(cusp_name(c));
    std::vector<std::string> want_cusps = *e.expected_cusps;
    std::sort(cusps.begin(), cusps.end());
    std::sort(want_cusps.begin(), want_cusps.end());
    if (cusps != want_cusps)
      return "cusps: expected {" + format_multiset(*e.expected_cusps) + "}, got {" + format_multiset(cusps) + "}";
  }

  KGroups k = assemble(d, table);
  const std::pair<const char*, std::pair<int, const KValue*>> checks[] = {
      {"Km1", {kDegreeKm1, &e.expected_km1}}, {"K0t", {kDegreeK0, &e.expected_k0t}}, {"Wh", {kDegreeWh, &e.expected_wh}}};
  for (const auto& [label, what] : checks) {
    const KValue got = k[what.first].normalized();
    if (got != what.second->normalized())
      return std::string(label) + ": expected " + what.second->render() + ", got " + got.render();
  }
  if (!k[kDegreeBelow].is_zero()) return "K<=-2: expected 0, got " + k[kDegreeBelow].render();
  return {};
}

VerifyReport verify_all(const VerifyOptions& options) {
  const EdgeBehaviorTable& table = options.table ? *options.table : EdgeBehaviorTable::standard();
  // Unknown names become failing entries rather than errors.
  struct Job {
    std::string name;
    const CatalogEntry* entry = nullptr;
    std::string lookup_error;
  };
  std::vector<Job> todo;
  if (options.names.empty()) {
    if (!options.subset_only)
      for (const auto& e : catalog()) todo.push_back({e.name, &e, {}});
  } else {
    for (const auto& n : options.names) {
      try {
        todo.push_back({n, &lookup(n), {}});
      } catch (const Error& err) {
        todo.push_back({n, nullptr, std::string(error_name(err.code())) + ": " + err.what()});
      }
    }
  }

  VerifyReport report;
  report.entries.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
      EntryReport& r = report.entries[i];
      const Job& job = todo[i];
      r.name = job.entry ? job.entry->name : job.name;
      if (!job.entry) {
        r.first_mismatch = job.lookup_error;
      } else {
        try {
          r.first_mismatch = diff_entry(*job.entry, table);
        } catch (const Error& err) {
          r.first_mismatch = std::string(error_name(err.code())) + ": " + err.what();
        } catch (const std::exception& err) {
          r.first_mismatch = std::string("Internal: ") + err.what();
        }
      }
      r.pass = r.first_mismatch.empty();
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.total = static_cast<int>(todo.size());
  report.passed = static_cast<int>(std::count_if(report.entries.begin(), report.entries.end(),
                                                 [](const EntryReport& r) { return r.pass; }));
  return report;
}

}  // namespace hypk
