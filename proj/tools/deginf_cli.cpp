// deginf: batch CLI over the degree-function library. Every command emits a
// JSON envelope {"spec_revision", "inputs_echo", "result"} and obeys the exit
// contract: 0 success, 1 property failure, 2 input error, 3 computation cap,
// 4 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <deginf/conjecture.hpp>
#include <deginf/json_io.hpp>
#include <deginf/suite.hpp>
#include <deginf/toric.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace deginf;
using nlohmann::json;

namespace {

constexpr const char* kSpecRevision = "1.0.0";

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapExceeded:
    case Errc::BoxExceeded:
      return 3;
    case Errc::InternalInvariant:
      return 4;
    default:
      return 2;
  }
}

// Inline JSON is passed through; anything else is read as a file.
std::string load_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) fail(Errc::ParseError, "cannot open input file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Polynomials come as term text ("x*y"), inline JSON, or a JSON file.
LaurentPolynomial load_polynomial(const std::string& arg, const RingDomain& dom) {
  if (!arg.empty() && arg.front() == '{') {
    LaurentPolynomial p = parse_polynomial_json(arg);
    if (p.domain() != dom) fail(Errc::DomainMismatch, "polynomial ring differs from the degree's");
    return p;
  }
  std::ifstream in(arg);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    LaurentPolynomial p = parse_polynomial_json(buf.str());
    if (p.domain() != dom) fail(Errc::DomainMismatch, "polynomial ring differs from the degree's");
    return p;
  }
  return parse_polynomial(arg, dom);
}

void emit(const json& envelope, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << envelope.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::ParseError, "cannot open output file '" + out_path + "'");
  out << envelope.dump(2) << "\n";
}

json envelope_for(const json& inputs_echo, const json& result) {
  return json{{"spec_revision", kSpecRevision}, {"inputs_echo", inputs_echo}, {"result", result}};
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("DEGINF_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(Errc::ParseError, "DEGINF_SEED is not an integer");
    }
  }
  return flag_seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree-like functions on Laurent/polynomial rings"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write the JSON envelope to this file (default stdout)");

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a degree function on a polynomial");
  std::string eval_degree, eval_poly;
  eval_cmd->add_option("--degree", eval_degree, "degree descriptor (JSON or file)")->required();
  eval_cmd->add_option("--poly", eval_poly, "polynomial (text, JSON or file)")->required();

  // ---- facets ----
  auto* facets_cmd = app.add_subcommand("facets", "H-representation of a polytope");
  std::string facets_polytope;
  facets_cmd->add_option("--polytope", facets_polytope, "polytope (JSON or file)")->required();

  // ---- subdegree ----
  auto* subdegree_cmd = app.add_subcommand("subdegree", "facet subdegree of a polytope");
  std::string subdegree_polytope;
  bool subdegree_minimal = false;
  subdegree_cmd->add_option("--polytope", subdegree_polytope, "polytope (JSON or file)")
      ->required();
  subdegree_cmd->add_flag("--minimal", subdegree_minimal, "reduce to the minimal presentation");

  // ---- extract ----
  auto* extract_cmd = app.add_subcommand("extract", "limit extraction of a semidegree part");
  std::string extract_degree, extract_witness, extract_f;
  unsigned extract_k_cap = 10;
  extract_cmd->add_option("--degree", extract_degree, "subdegree descriptor")->required();
  extract_cmd->add_option("--witness", extract_witness, "witness polynomial")->required();
  extract_cmd->add_option("--f", extract_f, "target polynomial")->required();
  extract_cmd->add_option("--k-cap", extract_k_cap, "power cap (default 10)");

  // ---- normalize ----
  auto* normalize_cmd = app.add_subcommand("normalize", "Rees normalization estimate");
  std::string normalize_degree, normalize_poly;
  unsigned normalize_m_cap = 12;
  normalize_cmd->add_option("--degree", normalize_degree, "degree descriptor")->required();
  normalize_cmd->add_option("--poly", normalize_poly, "polynomial")->required();
  normalize_cmd->add_option("--m-cap", normalize_m_cap, "power cap (default 12)");

  // ---- divisor ----
  auto* divisor_cmd = app.add_subcommand("divisor", "divisor at infinity of a subdegree");
  std::string divisor_degree;
  divisor_cmd->add_option("--degree", divisor_degree, "subdegree or polytope descriptor")
      ->required();

  // ---- intersect ----
  auto* intersect_cmd =
      app.add_subcommand("intersect", "intersection matrices of a surface polygon");
  std::string intersect_polygon;
  intersect_cmd->add_option("--polygon", intersect_polygon, "VERTEX_ON_AXES polytope")->required();

  // ---- linking ----
  auto* linking_cmd = app.add_subcommand("linking", "linking matrix or linking number");
  std::string linking_vs, linking_degree, linking_pole, linking_map = "[[1,0],[0,1]]";
  linking_cmd->add_option("--vs", linking_vs, "positive vectors (JSON array of int arrays)");
  linking_cmd->add_option("--degree", linking_degree, "plane subdegree descriptor");
  linking_cmd->add_option("--pole", linking_pole, "weighted-degree descriptor for the pole");
  linking_cmd->add_option("--map", linking_map, "2x2 integer map matrix (default identity)");

  // ---- nef ----
  auto* nef_cmd = app.add_subcommand("nef", "nef/ample test for a boundary divisor");
  std::string nef_vs, nef_m;
  nef_cmd->add_option("--vs", nef_vs, "curve normals (JSON array of int arrays)")->required();
  nef_cmd->add_option("--m", nef_m, "positive coefficients (JSON array)")->required();

  // ---- semigroup ----
  auto* semigroup_cmd = app.add_subcommand("semigroup", "graded point semigroup generators");
  std::string semigroup_polytope;
  unsigned semigroup_d_max = 4;
  semigroup_cmd->add_option("--polytope", semigroup_polytope, "polytope (JSON or file)")
      ->required();
  semigroup_cmd->add_option("--d-max", semigroup_d_max, "degree cap (default 4)");

  // ---- conjecture ----
  auto* conjecture_cmd =
      app.add_subcommand("conjecture", "seeded search for singular max-ratio matrices");
  ExperimentConfig cfg;
  conjecture_cmd->add_option("--n", cfg.n, "ambient dimension (default 3)");
  conjecture_cmd->add_option("--k-min", cfg.k_min, "minimum tuple size (default 1)");
  conjecture_cmd->add_option("--k-max", cfg.k_max, "maximum tuple size (default 5)");
  conjecture_cmd->add_option("--bound", cfg.entry_bound, "entry bound B (default 9)");
  conjecture_cmd->add_option("--trials", cfg.trials, "trial count (default 10000)");
  conjecture_cmd->add_option("--seed", cfg.seed, "master seed (default 42)");

  // ---- suite ----
  auto* suite_cmd = app.add_subcommand("suite", "cross-module property corpus");
  SuiteOptions suite_options;
  suite_cmd->add_option("--seed", suite_options.seed, "corpus seed");
  suite_cmd->add_option("--polytopes-2d", suite_options.polytopes_2d, "2-D corpus size");
  suite_cmd->add_option("--polytopes-3d", suite_options.polytopes_3d, "3-D corpus size");
  suite_cmd->add_option("--polygons", suite_options.polygons, "surface polygon corpus size");
  suite_cmd->add_option("--nef-instances", suite_options.nef_instances, "nef corpus size");
  suite_cmd->add_option("--mutate", suite_options.mutate,
                        "test hook: inject a known fault (break-linking)");

  // Let --out appear after the subcommand, e.g. `conjecture ... --out r.json`.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) {
      std::string degree_text = load_argument(eval_degree);
      DegreeObject obj = parse_degree_json(degree_text);
      LaurentPolynomial f = load_polynomial(eval_poly, domain_of(obj));
      DegreeValue v = evaluator_of(obj)(f);
      emit(envelope_for(json{{"degree", json::parse(degree_text)}, {"poly", eval_poly}},
                        json(v.str())),
           out_path);
      return 0;
    }

    if (*facets_cmd) {
      std::string text = load_argument(facets_polytope);
      RationalPolytope p = parse_polytope_json(text);
      emit(envelope_for(json{{"polytope", json::parse(text)}},
                        json::parse(facets_to_json(p.facets()))),
           out_path);
      return 0;
    }

    if (*subdegree_cmd) {
      std::string text = load_argument(subdegree_polytope);
      Subdegree s = subdegree_from_polytope(parse_polytope_json(text));
      if (subdegree_minimal) s = minimal_presentation(s);
      emit(envelope_for(json{{"polytope", json::parse(text)}, {"minimal", subdegree_minimal}},
                        json::parse(subdegree_to_json(s))),
           out_path);
      return 0;
    }

    if (*extract_cmd) {
      std::string text = load_argument(extract_degree);
      DegreeObject obj = parse_degree_json(text);
      if (!std::holds_alternative<Subdegree>(obj))
        fail(Errc::ParseError, "extract needs a subdegree descriptor");
      const Subdegree& s = std::get<Subdegree>(obj);
      LaurentPolynomial witness = load_polynomial(extract_witness, s.domain);
      LaurentPolynomial f = load_polynomial(extract_f, s.domain);
      ExtractionResult r = extract_semidegree(s, witness, f, extract_k_cap);
      emit(envelope_for(json{{"degree", json::parse(text)},
                             {"witness", extract_witness},
                             {"f", extract_f},
                             {"k_cap", extract_k_cap}},
                        json{{"value", r.value.str()}, {"converged", r.converged}}),
           out_path);
      return 0;
    }

    if (*normalize_cmd) {
      std::string text = load_argument(normalize_degree);
      DegreeObject obj = parse_degree_json(text);
      LaurentPolynomial f = load_polynomial(normalize_poly, domain_of(obj));
      NormalizationResult r = rees_normalize(evaluator_of(obj), f, normalize_m_cap);
      json result{{"value", r.value.str()}, {"converged", r.converged}};
      if (!r.value.is_neg_infinity())
        result["e"] = scale_to_integer({r.value}).get_str();
      emit(envelope_for(json{{"degree", json::parse(text)},
                             {"poly", normalize_poly},
                             {"m_cap", normalize_m_cap}},
                        result),
           out_path);
      return 0;
    }

    if (*divisor_cmd) {
      std::string text = load_argument(divisor_degree);
      DegreeObject obj = parse_degree_json(text);
      if (std::holds_alternative<GeneratedFiltration>(obj))
        fail(Errc::ParseError, "divisor needs a subdegree, weighted or polytope descriptor");
      Subdegree s = std::holds_alternative<RationalPolytope>(obj)
                        ? subdegree_from_polytope(std::get<RationalPolytope>(obj))
                        : (std::holds_alternative<Subdegree>(obj)
                               ? std::get<Subdegree>(obj)
                               : Subdegree({std::get<WeightedDegree>(obj)}));
      DivisorAtInfinity d = divisor_at_infinity(s);
      emit(envelope_for(json{{"degree", json::parse(text)}},
                        json::parse(divisor_to_json(d))),
           out_path);
      return 0;
    }

    if (*intersect_cmd) {
      std::string text = load_argument(intersect_polygon);
      Polygon2 polygon(parse_polytope_json(text));
      IntersectionReport r = intersection_report(polygon);
      emit(envelope_for(json{{"polygon", json::parse(text)}},
                        json::parse(intersection_report_to_json(r))),
           out_path);
      if (!r.agree) fail(Errc::InternalInvariant, "intersection routes disagree");
      return 0;
    }

    if (*linking_cmd) {
      if (!linking_vs.empty()) {
        json arr = json::parse(load_argument(linking_vs));
        std::vector<LatticeVector> vs;
        for (const auto& row : arr) {
          std::vector<Integer> e;
          for (const auto& x : row) e.emplace_back(x.get<long>());
          vs.push_back(LatticeVector(std::move(e)));
        }
        RationalMatrix l = linking_matrix(vs);
        emit(envelope_for(json{{"vs", arr}}, json{{"L", json::parse(matrix_to_json(l))}}),
             out_path);
        return 0;
      }
      if (linking_degree.empty() || linking_pole.empty())
        fail(Errc::ParseError, "linking needs either --vs or --degree with --pole");
      std::string dtext = load_argument(linking_degree);
      std::string ptext = load_argument(linking_pole);
      DegreeObject dobj = parse_degree_json(dtext);
      DegreeObject pobj = parse_degree_json(ptext);
      if (!std::holds_alternative<WeightedDegree>(pobj))
        fail(Errc::ParseError, "--pole must be a weighted descriptor");
      if (!std::holds_alternative<Subdegree>(dobj) &&
          !std::holds_alternative<WeightedDegree>(dobj))
        fail(Errc::ParseError, "--degree must be a weighted or subdegree descriptor");
      Subdegree delta = std::holds_alternative<Subdegree>(dobj)
                            ? std::get<Subdegree>(dobj)
                            : Subdegree({std::get<WeightedDegree>(dobj)});
      json map_json = json::parse(load_argument(linking_map));
      std::array<std::array<long, 2>, 2> m{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = map_json.at(i).at(j).get<long>();
      Rational value = linking_at_infinity_2d(delta, std::get<WeightedDegree>(pobj), m);
      emit(envelope_for(
               json{{"degree", json::parse(dtext)}, {"pole", json::parse(ptext)},
                    {"map", map_json}},
               json{{"value", value.str()}}),
           out_path);
      return 0;
    }

    if (*nef_cmd) {
      json vs_json = json::parse(load_argument(nef_vs));
      json m_json = json::parse(load_argument(nef_m));
      std::vector<LatticeVector> vs;
      for (const auto& row : vs_json) {
        std::vector<Integer> e;
        for (const auto& x : row) e.emplace_back(x.get<long>());
        vs.push_back(LatticeVector(std::move(e)));
      }
      RationalVector m;
      for (const auto& x : m_json)
        m.push_back(x.is_string() ? Rational::parse(x.get<std::string>())
                                  : Rational(Integer(x.get<long>())));
      NefResult r = nef_membership(vs, m);
      emit(envelope_for(json{{"vs", vs_json}, {"m", m_json}},
                        json::parse(nef_result_to_json(r))),
           out_path);
      return 0;
    }

    if (*semigroup_cmd) {
      std::string text = load_argument(semigroup_polytope);
      RationalPolytope p = parse_polytope_json(text);
      SemigroupResult r = semigroup_generators(p, semigroup_d_max);
      emit(envelope_for(json{{"polytope", json::parse(text)}, {"d_max", semigroup_d_max}},
                        json::parse(semigroup_to_json(r))),
           out_path);
      return 0;
    }

    if (*conjecture_cmd) {
      cfg.seed = effective_seed(cfg.seed);
      ExperimentReport report = linking_determinant_experiment(cfg);
      emit(envelope_for(json{{"n", cfg.n},
                             {"k_min", cfg.k_min},
                             {"k_max", cfg.k_max},
                             {"bound", cfg.entry_bound},
                             {"trials", cfg.trials},
                             {"seed", cfg.seed}},
                        json::parse(experiment_report_to_json(report, true))),
           out_path);
      return report.counterexamples.empty() ? 0 : 1;
    }

    if (*suite_cmd) {
      suite_options.seed = effective_seed(suite_options.seed);
      SuiteReport report = run_suite(suite_options);
      std::cerr << suite_report_to_text(report);
      json props = json::array();
      for (const auto& p : report.properties) {
        json item{{"name", p.name}, {"instances", p.instances}, {"failures", p.failures}};
        if (!p.ok()) item["first_failure"] = p.first_failure;
        props.push_back(item);
      }
      emit(envelope_for(json{{"seed", suite_options.seed}, {"mutate", suite_options.mutate}},
                        json{{"properties", props}, {"all_ok", report.all_ok()}}),
           out_path);
      return report.all_ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    json envelope{{"spec_revision", kSpecRevision},
                  {"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
    std::cout << envelope.dump(2) << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    json envelope{{"spec_revision", kSpecRevision},
                  {"error", {{"code", "ParseError"}, {"message", e.what()}}}};
    std::cout << envelope.dump(2) << "\n";
    return 2;
  }
  return 2;
}
