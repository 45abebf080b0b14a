#include "jsyz/corpus.hpp"

#include <json.hpp>

#include "jsyz/errors.hpp"
#include "jsyz/report_json.hpp"

namespace jsyz {

namespace {

template <class T>
std::optional<T> opt_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

Expected parse_expected(const nlohmann::json& j) {
  Expected e;
  e.exponents = opt_field<std::vector<int>>(j, "exponents");
  e.epsilons = opt_field<std::vector<int>>(j, "epsilons");
  e.tau = opt_field<long>(j, "tau");
  e.nu = opt_field<long>(j, "nu");
  e.type = opt_field<int>(j, "type");
  e.subtype = opt_field<std::string>(j, "subtype");
  e.triple_points_joined = opt_field<bool>(j, "triple_points_joined");
  if (j.contains("census")) {
    std::map<int, int> c;
    for (const auto& [k, v] : j.at("census").items()) c[std::stoi(k)] = v.get<int>();
    e.census = std::move(c);
  }
  return e;
}

BuilderSpec parse_builder(const nlohmann::json& j) {
  BuilderSpec b;
  b.family = j.at("family").get<std::string>();
  b.n1 = j.value("n1", 0);
  b.n2 = j.value("n2", 0);
  b.d = j.value("d", 0);
  b.j = j.value("j", 0);
  b.variant = j.value("variant", std::string("plain"));
  b.base = j.value("base", std::string());
  return b;
}

std::string census_string(const std::map<int, int>& c) {
  std::string s;
  for (const auto& [m, k] : c) s += (s.empty() ? "" : " ") + ("n" + std::to_string(m) + "=" + std::to_string(k));
  return s;
}

CjVariant parse_variant(const std::string& v) {
  if (v == "plain") return CjVariant::Plain;
  if (v == "x") return CjVariant::X;
  if (v == "xy") return CjVariant::XY;
  if (v == "xyz") return CjVariant::XYZ;
  throw InputError("unknown variant '" + v + "'");
}

template <class T>
void expect(std::vector<Check>& out, const char* name, const std::optional<T>& want, const T& got,
            std::string (*show)(const T&)) {
  if (want) out.push_back({name, show(*want), show(got), *want == got});
}

std::string show_vec(const std::vector<int>& v) { return tuple_string(v); }
std::string show_long(const long& v) { return std::to_string(v); }
std::string show_int(const int& v) { return std::to_string(v); }
std::string show_str(const std::string& v) { return v; }
std::string show_bool(const bool& v) { return v ? "true" : "false"; }
std::string show_census(const std::map<int, int>& c) { return census_string(c); }

void run_arrangement(CorpusResult& res, const LineArrangement& arr, const AnalysisOptions& opt) {
  auto ar = analyze_arrangement(arr, opt, res.name);
  res.lines = arr.to_strings();
  res.polynomial = arr.product().to_string();
  res.comb = std::move(ar.comb);
  res.report = std::move(ar.curve);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  try {
    for (const auto& item : j) {
      CorpusEntry e;
      e.name = item.at("name").get<std::string>();
      e.source = item.value("source", std::string());
      e.polynomial = opt_field<std::string>(item, "polynomial");
      e.lines = opt_field<std::vector<std::string>>(item, "lines");
      if (item.contains("builder")) e.builder = parse_builder(item.at("builder"));
      const int kinds = int(e.polynomial.has_value()) + int(e.lines.has_value()) + int(e.builder.has_value());
      if (kinds != 1) throw InputError("corpus entry '" + e.name + "' needs exactly one of polynomial, lines, builder");
      if (item.contains("expected")) e.expected = parse_expected(item.at("expected"));
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed corpus entry: ") + e.what());
  }
  return out;
}

bool CorpusResult::pass() const {
  if (!error.empty() || !report || !report->all_pass()) return false;
  for (const auto& c : expectations)
    if (!c.pass) return false;
  return true;
}

CorpusResult run_entry(const CorpusEntry& e, const RunConfig& cfg) {
  CorpusResult res;
  res.name = e.name;
  res.source = e.source;
  const AnalysisOptions opt{cfg.field};
  try {
    if (e.polynomial) {
      const auto f = parse_poly(*e.polynomial);
      res.polynomial = f.to_string();
      res.report = analyze(f, opt, e.name);
    } else if (e.lines) {
      run_arrangement(res, LineArrangement::parse(*e.lines), opt);
    } else {
      const BuilderSpec& b = *e.builder;
      if (b.family == "thmAd") {
        run_arrangement(res, build_thmAd(b.n1, b.n2, cfg.seed), opt);
        const long want = long(b.n1 - 1) * (b.n1 - 1) + long(b.n2 - 1) * (b.n2 - 1) + long(b.n1) * b.n2;
        const long got = tjurina(build_two_pencils(b.n1, b.n2).product(), cfg.field);
        res.report->checks.push_back({"tau_two_pencils", std::to_string(want), std::to_string(got), want == got});
      } else if (b.family == "nodal_lines") {
        run_arrangement(res, random_nodal_arrangement(b.d, cfg.seed), opt);
      } else if (b.family == "max_tjurina") {
        run_arrangement(res, build_max_tjurina_arrangement(b.d, cfg.seed), opt);
      } else {
        HomogeneousPoly f;
        if (b.family == "Cj") f = build_Cj_family(b.j, parse_variant(b.variant));
        else if (b.family == "line_times") f = generic_line_times(parse_poly(b.base), cfg.seed);
        else if (b.family == "conic_times") f = generic_conic_times(parse_poly(b.base), cfg.seed);
        else throw InputError("unknown builder family '" + b.family + "'");
        res.polynomial = f.to_string();
        res.report = analyze(f, opt, e.name);
      }
    }
  } catch (const InputError& ex) {
    res.error = std::string("input error: ") + ex.what();
    return res;
  } catch (const ConsistencyError& ex) {
    res.error = std::string("consistency failure: ") + ex.what();
    res.consistency_error = true;
    return res;
  }

  const CurveReport& r = *res.report;
  const Expected& x = e.expected;
  auto& out = res.expectations;
  expect(out, "expected_exponents", x.exponents, r.syzygy.exponents, show_vec);
  expect(out, "expected_epsilons", x.epsilons, r.syzygy.epsilons, show_vec);
  expect(out, "expected_tau", x.tau, r.tau, show_long);
  expect(out, "expected_nu", x.nu, r.nu, show_long);
  expect(out, "expected_type", x.type, r.type_t, show_int);
  expect(out, "expected_subtype", x.subtype, r.subtype_label(), show_str);
  if (x.census || x.triple_points_joined) {
    if (!res.comb) {
      out.push_back({"expected_census", "an arrangement", "not an arrangement", false});
    } else {
      expect(out, "expected_census", x.census, res.comb->n, show_census);
      expect(out, "expected_triple_points_joined", x.triple_points_joined, res.comb->triple_points_joined,
             show_bool);
    }
  }
  return res;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, const RunConfig& cfg) {
  std::vector<const CorpusEntry*> selected;
  for (const auto& e : entries)
    if (cfg.filter.empty() || e.name.find(cfg.filter) != std::string::npos) selected.push_back(&e);
  std::vector<CorpusResult> results(selected.size());
  const int n = static_cast<int>(selected.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
  for (int i = 0; i < n; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = run_entry(*selected[static_cast<std::size_t>(i)], cfg);
    } catch (const std::exception& ex) {
      auto& r = results[static_cast<std::size_t>(i)];
      r.name = selected[static_cast<std::size_t>(i)]->name;
      r.error = std::string("unexpected failure: ") + ex.what();
      r.consistency_error = true;
    }
  }
  return results;
}

int corpus_exit_code(const std::vector<CorpusResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    if (r.pass()) continue;
    if (r.consistency_error || (r.report && r.report->consistency_failure())) return 3;
    code = 2;
  }
  return code;
}

}  // namespace jsyz
