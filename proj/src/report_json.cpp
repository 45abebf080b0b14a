#include "jsyz/report_json.hpp"

#include <sstream>

namespace jsyz {

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

namespace {

const char* field_name(FieldMode m) { return m == FieldMode::Rational ? "rational" : "prime"; }

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return out;
}

Json census_json(const std::map<int, int>& n) {
  Json out = Json::object();
  for (const auto& [m, k] : n) out[std::to_string(m)] = k;
  return out;
}

void checks_table(std::ostringstream& os, const std::vector<Check>& checks) {
  os << "checks:\n";
  for (const auto& c : checks)
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected: " << c.expected << "  actual: " << c.actual
       << "\n";
}

}  // namespace

Json to_json(const CurveReport& r, bool timings) {
  Json j;
  j["name"] = r.name;
  j["field"] = field_name(r.field);
  j["degree"] = r.d;
  j["exponents"] = r.syzygy.exponents;
  j["epsilons"] = r.syzygy.epsilons;
  j["relation_degrees"] = r.syzygy.relation_degrees;
  j["regularity"] = r.syzygy.regularity;
  j["tau"] = r.tau;
  j["nu"] = r.nu;
  Json n = Json::object();
  for (std::size_t k = 0; k < r.n_table.size(); ++k) n[std::to_string(k)] = r.n_table[k];
  j["n_table"] = std::move(n);
  j["type"] = r.type_t;
  j["subtype"] = r.subtype_label();
  Json gens = Json::array();
  for (const auto& g : r.syzygy.generators) {
    Json row = Json::array();
    for (const auto& c : g.components()) row.push_back(c.to_string());
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  if (r.second_syzygy) {
    const auto& t = *r.second_syzygy;
    Json deg = Json::array();
    for (const auto& row : t.degree) {
      Json jr = Json::array();
      for (const auto& v : row) jr.push_back(v ? Json(*v) : Json(nullptr));
      deg.push_back(std::move(jr));
    }
    j["second_syzygy"] = {{"degrees", std::move(deg)},
                          {"shifted_formula", t.shifted_formula},
                          {"formula_agrees", t.formula_agrees}};
  }
  j["checks"] = checks_json(r.checks);
  if (timings) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

Json to_json(const ArrangementCombinatorics& c) {
  Json pts = Json::array();
  for (const auto& p : c.points)
    if (p.multiplicity() > 2) pts.push_back({{"point", to_string(p.point)}, {"multiplicity", p.multiplicity()}, {"lines", p.lines}});
  return {{"lines", c.d},
          {"census", census_json(c.n)},
          {"max_multiplicity", c.max_mult},
          {"tau_combinatorial", c.tau_comb},
          {"triple_points_joined", c.triple_points_joined},
          {"multiple_points", std::move(pts)}};
}

Json to_json(const ArrangementReport& r, bool timings) {
  Json j;
  j["combinatorics"] = to_json(r.comb);
  if (r.verdict)
    j["verdict"] = {{"verdict", verdict_name(r.verdict->verdict)}, {"rule", r.verdict->rule}, {"expected", r.verdict->expected}};
  j["report"] = to_json(r.curve, timings);
  return j;
}

Json to_json(const CorpusResult& r, bool timings) {
  Json j;
  j["name"] = r.name;
  j["source"] = r.source;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  j["polynomial"] = r.polynomial;
  if (!r.lines.empty()) j["lines"] = r.lines;
  j["expectations"] = checks_json(r.expectations);
  if (!r.error.empty()) j["error"] = r.error;
  if (r.comb) j["combinatorics"] = to_json(*r.comb);
  if (r.report) j["report"] = to_json(*r.report, timings);
  return j;
}

Json to_json(const SearchResult& r, const SearchParams& p) {
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back({{"sample", h.sample}, {"polynomial", h.polynomial}, {"tau", h.tau}});
  Json hist = Json::array();
  for (const auto& [e, k] : r.histogram) hist.push_back({{"exponents", e}, {"count", k}});
  Json j;
  j["degree"] = p.d;
  j["target"] = p.target;
  j["coeff_bound"] = p.coeff_bound;
  j["samples"] = r.samples;
  j["seed"] = p.seed;
  j["skipped"] = r.skipped;
  j["hits"] = std::move(hits);
  j["histogram"] = std::move(hist);
  if (r.hits.empty()) j["note"] = "no witness found under these bounds";
  return j;
}

std::string render_table(const CurveReport& r, bool timings) {
  std::ostringstream os;
  if (!r.name.empty()) os << "name:        " << r.name << "\n";
  os << "degree:      " << r.d << "  (field: " << field_name(r.field) << ")\n";
  os << "exponents:   " << tuple_string(r.syzygy.exponents) << "\n";
  os << "epsilons:    " << tuple_string(r.syzygy.epsilons) << "\n";
  os << "relations:   " << tuple_string(r.syzygy.relation_degrees) << "\n";
  os << "regularity:  " << r.syzygy.regularity << "\n";
  os << "tau:         " << r.tau << "\n";
  os << "nu:          " << r.nu << "\n";
  os << "type:        " << r.type_t << "  subtype: " << r.subtype_label() << "\n";
  os << "n(f)_k:     ";
  for (std::size_t k = 0; k < r.n_table.size(); ++k)
    if (r.n_table[k] != 0) os << " " << k << ":" << r.n_table[k];
  os << "\n";
  if (r.second_syzygy) {
    os << "relation coefficient degrees (formula agrees: " << (r.second_syzygy->formula_agrees ? "yes" : "no") << "):\n";
    for (const auto& row : r.second_syzygy->degree) {
      os << " ";
      for (const auto& v : row) os << " " << (v ? std::to_string(*v) : std::string("-"));
      os << "\n";
    }
  }
  checks_table(os, r.checks);
  if (timings) {
    os << "timings (ms):";
    for (const auto& [k, v] : r.timings_ms) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

std::string render_table(const ArrangementReport& r, bool timings) {
  std::ostringstream os;
  os << "lines:       " << r.comb.d << "\n";
  os << "census:     ";
  for (const auto& [m, k] : r.comb.n) os << " n" << m << "=" << k;
  os << "\n";
  os << "m(A):        " << r.comb.max_mult << "\n";
  os << "tau_comb:    " << r.comb.tau_comb << "\n";
  os << "triple points joined by a line: " << (r.comb.triple_points_joined ? "yes" : "no") << "\n";
  for (const auto& p : r.comb.points)
    if (p.multiplicity() > 2) os << "  point " << to_string(p.point) << " multiplicity " << p.multiplicity() << "\n";
  if (r.verdict)
    os << "verdict:     " << verdict_name(r.verdict->verdict) << " (" << r.verdict->rule << "; expects "
       << r.verdict->expected << ")\n";
  os << render_table(r.curve, timings);
  return os.str();
}

std::string render_table(const std::vector<CorpusResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    const bool ok = r.pass();
    passed += ok;
    os << (ok ? "PASS " : "FAIL ") << r.name;
    if (r.report)
      os << "  exponents " << tuple_string(r.report->syzygy.exponents) << "  tau " << r.report->tau << "  nu "
         << r.report->nu << "  " << r.report->subtype_label();
    os << "\n";
    if (ok) continue;
    os << "     source: " << r.source << "\n";
    if (!r.error.empty()) os << "     " << r.error << "\n";
    for (const auto& c : r.expectations)
      if (!c.pass) os << "     " << c.name << ": expected " << c.expected << ", computed " << c.actual << "\n";
    if (r.report)
      for (const auto& c : r.report->checks)
        if (!c.pass) os << "     check " << c.name << ": expected " << c.expected << ", computed " << c.actual << "\n";
  }
  os << passed << "/" << results.size() << " entries pass\n";
  return os.str();
}

std::string render_table(const SearchResult& r, const SearchParams& p) {
  std::ostringstream os;
  os << "degree " << p.d << ", target " << tuple_string(p.target) << ", coefficients in [-" << p.coeff_bound << ", "
     << p.coeff_bound << "], seed " << p.seed << "\n";
  os << r.samples << " samples, " << r.skipped << " skipped\n";
  if (r.hits.empty()) os << "no witness found under these bounds\n";
  for (const auto& h : r.hits) os << "hit  sample " << h.sample << "  tau " << h.tau << "  " << h.polynomial << "\n";
  os << "exponent histogram:\n";
  for (const auto& [e, k] : r.histogram) os << "  " << tuple_string(e) << "  " << k << "\n";
  return os.str();
}

}  // namespace jsyz
