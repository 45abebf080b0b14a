// jsyz: command-line front end (analyze, corpus, arrangement, search).
//
// Exit codes: 0 all checks pass, 1 input or configuration error, 2 a check
// failed, 3 an internal consistency failure.

#include <CLI11.hpp>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jsyz/errors.hpp"
#include "jsyz/report_json.hpp"

using namespace jsyz;

namespace {

struct Common {
  std::string field = "prime";
  bool json = false;
  bool table = false;
  bool timings = false;
  int jobs = 1;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--field", c.field, "rational | prime (prime ranks are certified over Q)")
      ->check(CLI::IsMember({"rational", "prime"}));
  auto* j = app->add_flag("--json", c.json, "JSON output");
  app->add_flag("--table", c.table, "plain-text output (default)")->excludes(j);
  app->add_flag("--timings", c.timings, "include per-stage wall times");
  app->add_option("--jobs", c.jobs, "parallel width")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed for generic constructions and sampling");
}

FieldMode field_of(const Common& c) { return c.field == "rational" ? FieldMode::Rational : FieldMode::Prime; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// A literal, or the contents of a file when the argument names one.
std::string literal_or_file(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return slurp(arg);
  return arg;
}

int exit_code(const CurveReport& r) {
  if (r.all_pass()) return 0;
  return r.consistency_failure() ? 3 : 2;
}

int cmd_analyze(const std::string& input, const std::string& name, const Common& c) {
  std::string text = literal_or_file(input);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  const auto f = parse_poly(text);
  const auto r = analyze(f, AnalysisOptions{field_of(c)}, name.empty() ? text : name);
  if (c.json) std::cout << to_json(r, c.timings).dump(2) << "\n";
  else std::cout << render_table(r, c.timings);
  return exit_code(r);
}

int cmd_arrangement(const std::vector<std::string>& args, const std::string& name, const Common& c) {
  std::vector<std::string> lines;
  if (args.size() == 1) {
    const std::string text = literal_or_file(args[0]);
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '[') {
      try {
        lines = nlohmann::json::parse(text).get<std::vector<std::string>>();
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("arrangement must be a JSON list of linear forms: ") + e.what());
      }
    } else {
      lines = args;
    }
  } else {
    lines = args;
  }
  const auto arr = LineArrangement::parse(lines);
  const auto r = analyze_arrangement(arr, AnalysisOptions{field_of(c)}, name);
  if (c.json) std::cout << to_json(r, c.timings).dump(2) << "\n";
  else std::cout << render_table(r, c.timings);
  return exit_code(r.curve);
}

int cmd_corpus(const std::string& path, const std::string& filter, const Common& c) {
  const auto entries = parse_corpus(path.empty() ? embedded_corpus_text() : slurp(path));
  RunConfig cfg;
  cfg.field = field_of(c);
  cfg.json = c.json;
  cfg.jobs = c.jobs;
  cfg.seed = c.seed;
  cfg.filter = filter;
  cfg.timings = c.timings;
  const auto results = run_corpus(entries, cfg);
  if (c.json) {
    Json j = Json::array();
    for (const auto& r : results) j.push_back(to_json(r, c.timings));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_table(results);
  }
  return corpus_exit_code(results);
}

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  for (char ch : s + ",") {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
      if (!tok.empty()) {
        try {
          out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InputError("bad exponent '" + tok + "'");
        }
      }
      tok.clear();
    } else {
      tok += ch;
    }
  }
  return out;
}

int cmd_search(SearchParams p, const std::string& target, const Common& c) {
  p.target = parse_tuple(target);
  p.seed = c.seed;
  p.jobs = c.jobs;
  p.field = field_of(c);
  const auto r = run_search(p);
  if (c.json) std::cout << to_json(r, p).dump(2) << "\n";
  else std::cout << render_table(r, p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian syzygies, Tjurina numbers and type-3 classification of plane curves"};
  app.require_subcommand(1);

  Common common;
  std::string input, name, corpus_path, filter, target;
  SearchParams sp;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one curve f(x,y,z) = 0");
  analyze_cmd->add_option("input", input, "polynomial, or a file containing one")->required();
  analyze_cmd->add_option("--name", name, "name shown in the report");
  add_common(analyze_cmd, common);

  auto* corpus_cmd = app.add_subcommand("corpus", "run the regression corpus");
  corpus_cmd->add_option("--corpus", corpus_path, "corpus JSON file (default: embedded)");
  corpus_cmd->add_option("--filter", filter, "only entries whose name contains this substring");
  add_common(corpus_cmd, common);

  auto* arr_cmd = app.add_subcommand("arrangement", "analyze a line arrangement");
  // Taken from the leftover arguments: a vector option would split a JSON
  // list on commas itself.
  arr_cmd->allow_extras();
  arr_cmd->footer("Lines: linear forms as separate arguments, one JSON list, or a file holding a JSON list.");
  arr_cmd->add_option("--name", name, "name shown in the report");
  add_common(arr_cmd, common);

  auto* search_cmd = app.add_subcommand("search", "random search for curves with given exponents");
  search_cmd->add_option("--degree", sp.d, "degree d >= 3")->required();
  search_cmd->add_option("--target", target, "target exponents, e.g. 3,3,3,3,4")->required();
  search_cmd->add_option("--coeff-bound", sp.coeff_bound, "coefficients in [-B, B]")->check(CLI::PositiveNumber);
  search_cmd->add_option("--samples", sp.samples, "number of samples")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--min-terms", sp.min_terms, "smallest support size")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-terms", sp.max_terms, "largest support size")->check(CLI::PositiveNumber);
  add_common(search_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, name, common);
    if (*corpus_cmd) return cmd_corpus(corpus_path, filter, common);
    if (*arr_cmd) {
      const auto line_args = arr_cmd->remaining();
      if (line_args.empty()) throw InputError("arrangement needs at least one line");
      return cmd_arrangement(line_args, name, common);
    }
    if (*search_cmd) return cmd_search(sp, target, common);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
