// mirrorpoly: command-line front end.
//
// Exit status: 0 success, 1 mathematical failure, 2 input or usage error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirrorpoly/mirrorpoly.hpp"

#ifndef MIRRORPOLY_DEFAULT_FIXTURES
#define MIRRORPOLY_DEFAULT_FIXTURES "fixtures/bimodal16.json"
#endif

namespace mp = mirrorpoly;
using mp::Json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kOk = 0, kMathFailure = 1, kInputError = 2;

struct Options {
  std::string format = "text";
  std::string cases_path;
  std::string case_name;
  bool all = false;
  std::string polynomial;
  std::string polytope_path;
  std::size_t max_candidates = 1'000'000;
};

std::string fixtures_path(const Options& o) {
  if (!o.cases_path.empty()) return o.cases_path;
  if (const char* env = std::getenv("MIRRORPOLY_FIXTURES"); env && *env) return env;
  return MIRRORPOLY_DEFAULT_FIXTURES;
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Prints either the text or the JSON document; returns `status`.
int emit(const Options& o, const std::string& command, const Json& payload, const std::string& text, int status) {
  if (o.format == "json") {
    Json doc{{"command", command}, {"version", kVersion}, {"timestamp", utc_timestamp()},
             {"payload", payload}, {"exit_status", status}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return status;
}

std::string points_text(const std::vector<mp::IntVec>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + mp::to_string(p);
  return s;
}

int cmd_transpose(const Options& o) {
  auto a = mp::parse_polynomial(o.polynomial);
  auto t = mp::print_polynomial(mp::transpose(a));
  return emit(o, "transpose", Json{{"input", o.polynomial}, {"transpose", t}}, t + "\n", kOk);
}

int cmd_weights(const Options& o) {
  auto w = mp::primitive_weight_system(mp::parse_polynomial(o.polynomial));
  return emit(o, "weights", mp::io::encode(w), mp::to_string(w) + "\n", kOk);
}

int cmd_gmax(const Options& o) {
  auto a = mp::parse_polynomial(o.polynomial);
  auto g = mp::gmax_group(a);
  mp::DiagonalGroup minimal(g.dim(), g.minimal_generators());
  std::string text = "order " + std::to_string(g.order()) + "\n";
  for (const auto& x : minimal.generators()) text += x.str() + "\n";
  Json payload = mp::io::encode(minimal);
  payload["J"] = mp::io::encode(mp::j_element(a));
  return emit(o, "gmax", payload, text, kOk);
}

int cmd_cases(const Options& o) {
  auto cases = mp::load_cases(fixtures_path(o));
  Json names = Json::array();
  std::string text;
  for (const auto& c : cases) {
    names.push_back(Json{{"name", c.name}, {"id", mp::normalize_case_name(c.name)}, {"F", c.F}});
    text += mp::normalize_case_name(c.name) + "  " + c.name + "  " + c.F + "\n";
  }
  return emit(o, "cases", names, text, kOk);
}

int cmd_verify(const Options& o) {
  auto cases = mp::load_cases(fixtures_path(o));
  std::vector<const mp::CaseRecord*> selected;
  if (o.all) {
    for (const auto& c : cases) selected.push_back(&c);
  } else if (!o.case_name.empty()) {
    selected.push_back(&mp::find_case(cases, o.case_name));
  } else {
    throw CLI::ValidationError("verify", "give --all or --case NAME");
  }
  Json reports = Json::array();
  std::string text;
  bool ok = true;
  std::size_t passed = 0;
  for (const auto* c : selected) {
    auto r = mp::verify_case(*c);
    ok = ok && r.passed();
    passed += r.passed();
    reports.push_back(mp::report_to_json(r));
    text += mp::render_text(r);
    for (const auto& e : c->errata) text += "  erratum applied to " + e.field + ": " + e.note + "\n";
  }
  if (selected.size() > 1) text += std::to_string(passed) + "/" + std::to_string(selected.size()) + " cases passed\n";
  return emit(o, "verify", Json{{"cases", fixtures_path(o)}, {"reports", reports}, {"all_passed", ok}}, text,
              ok ? kOk : kMathFailure);
}

int cmd_dual(const Options& o) {
  auto p = mp::io::decode_polytope(mp::io::read_json_file(o.polytope_path));
  mp::RationalPolytope d = [&] {
    try {
      return mp::polar_dual(p);
    } catch (const mp::OriginNotInteriorError& e) {
      throw mp::DomainError(std::string(e.what()) + "; the polar dual is unbounded");
    }
  }();
  auto lp = mp::to_lattice(p);
  bool reflexive = lp && mp::is_reflexive(*lp);
  std::string text = "dual vertices:";
  for (const auto& v : d.vertices()) text += " " + mp::to_string(v);
  text += "\nreflexive: " + std::string(reflexive ? "true" : "false") + "\n";
  return emit(o, "dual", Json{{"dual", mp::io::encode(d)}, {"reflexive", reflexive}}, text, kOk);
}

int cmd_search(const Options& o) {
  if (o.case_name.empty()) throw CLI::ValidationError("search", "give --case NAME");
  auto cases = mp::load_cases(fixtures_path(o));
  const auto& rec = mp::find_case(cases, o.case_name);
  auto np = mp::newton_polytopes(rec);
  auto res = mp::sandwich_search(np.lower, np.upper, o.max_candidates);
  Json payload{{"case", rec.name},
               {"candidate_points", res.candidate_points},
               {"sets_examined", res.sets_examined},
               {"found", res.polytope.has_value()}};
  if (!res.polytope) {
    return emit(o, "search", payload, rec.name + ": no reflexive sandwich polytope among the candidates\n",
                kMathFailure);
  }
  // Validate by running the pipeline with the found polytope in place of the
  // tabulated one.
  mp::CaseRecord trial = rec;
  trial.Delta = res.polytope->vertices();
  trial.DeltaDual = mp::to_lattice(mp::polar_dual(*res.polytope))->vertices();
  auto rep = mp::verify_case(trial);
  bool valid = true;
  Json checks = Json::array();
  std::string summary;
  for (int id = 8; id <= 11; ++id) {
    const auto& c = rep.check(id);
    valid = valid && c.passed;
    checks.push_back(Json{{"id", id}, {"name", c.name}, {"passed", c.passed}});
    summary += "  [" + std::string(c.passed ? "ok  " : "FAIL") + "] " + std::to_string(id) + ". " + c.name + "\n";
  }
  bool newton = res.polytope->vertices() == np.lower.vertices();
  payload["added"] = res.added;
  payload["delta"] = mp::io::encode(*res.polytope);
  payload["delta_dual"] = trial.DeltaDual;
  payload["equals_newton_polytope"] = newton;
  payload["checks"] = checks;
  std::string text = rec.name + ": " + std::to_string(res.added.size()) + " added vertices" +
                     (res.added.empty() ? "" : " " + points_text(res.added)) + "\n";
  text += "  Delta  = " + points_text(res.polytope->vertices()) + (newton ? "  (= Delta_(F,G))" : "") + "\n";
  text += "  Delta° = " + points_text(trial.DeltaDual) + "\n" + summary;
  return emit(o, "search", payload, text, valid ? kOk : kMathFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berglund-Huebsch transposition and polar duality for invertible polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_cases = [&](CLI::App* sub) { sub->add_option("--cases", o.cases_path, "case file (JSON)"); };

  auto* transpose = app.add_subcommand("transpose", "print the transposed polynomial");
  transpose->add_option("polynomial", o.polynomial)->required();
  add_format(transpose);

  auto* weights = app.add_subcommand("weights", "primitive weight system (q;h)");
  weights->add_option("polynomial", o.polynomial)->required();
  add_format(weights);

  auto* gmax = app.add_subcommand("gmax", "group of maximal diagonal symmetries");
  gmax->add_option("polynomial", o.polynomial)->required();
  add_format(gmax);

  auto* verify = app.add_subcommand("verify", "run the eleven checks on bundled or given cases");
  verify->add_flag("--all", o.all, "every case in the file");
  verify->add_option("--case", o.case_name, "case name, e.g. J_3_0 or J_{3,0}");
  add_cases(verify);
  add_format(verify);

  auto* dual = app.add_subcommand("dual", "polar dual of a polytope file");
  dual->add_option("polytope", o.polytope_path)->required();
  add_format(dual);

  auto* search = app.add_subcommand("search", "search for a reflexive sandwich polytope");
  search->add_option("--case", o.case_name, "case name")->required();
  search->add_option("--max-candidates", o.max_candidates, "cap on candidate sets");
  add_cases(search);
  add_format(search);

  auto* cases = app.add_subcommand("cases", "list the cases in the case file");
  add_cases(cases);
  add_format(cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*transpose) return cmd_transpose(o);
    if (*weights) return cmd_weights(o);
    if (*gmax) return cmd_gmax(o);
    if (*verify) return cmd_verify(o);
    if (*dual) return cmd_dual(o);
    if (*search) return cmd_search(o);
    if (*cases) return cmd_cases(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::DomainError& e) {
    // Unknown case names and malformed inputs are usage errors; geometric
    // failures are reported by the commands themselves.
    std::cerr << "error: " << e.what() << "\n";
    return *dual ? kMathFailure : kInputError;
  } catch (const mp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}
