#include "deginf/json_io.hpp"

#include <json.hpp>

namespace deginf {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON input");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(Errc::ParseError, "rationals must be strings like \"p/q\" (or plain integers)");
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) fail(Errc::ParseError, "expected an integer value");
    return r.num();
  }
  fail(Errc::ParseError, "expected an integer value");
}

LatticeVector lattice_from(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "expected a nonempty integer array");
  std::vector<Integer> e;
  for (const auto& x : j) e.push_back(integer_from(x));
  return LatticeVector(std::move(e));
}

RationalVector rational_vector_from(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "expected a nonempty rational array");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

RingDomain domain_from(const json& j) {
  std::size_t n = field(j, "n").get<std::size_t>();
  std::string mode = field(j, "mode").get<std::string>();
  if (n == 0) fail(Errc::ParseError, "ring dimension must be >= 1");
  if (mode == "LAURENT") return laurent_domain(n);
  if (mode == "POLYNOMIAL") return polynomial_domain(n);
  fail(Errc::ParseError, "mode must be LAURENT or POLYNOMIAL");
}

json domain_to(const RingDomain& dom) {
  return json{{"n", dom.n}, {"mode", dom.mode == RingMode::Laurent ? "LAURENT" : "POLYNOMIAL"}};
}

LaurentPolynomial polynomial_from(const json& j) {
  RingDomain dom = domain_from(field(j, "domain"));
  LaurentPolynomial p(dom);
  for (const auto& t : field(j, "terms"))
    p.add_term(lattice_from(field(t, "exp")), rational_from(field(t, "coef")));
  return p;
}

json lattice_to(const LatticeVector& v) {
  // Integer entries travel as JSON numbers (the documented wire format);
  // anything beyond 64 bits falls back to decimal strings.
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].fits_slong_p()) a.push_back(v[i].get_si());
    else a.push_back(v[i].get_str());
  }
  return a;
}

json polynomial_to(const LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", lattice_to(e)}, {"coef", c.str()}});
  return json{{"domain", domain_to(p.domain())}, {"terms", terms}};
}

json rational_vector_to(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json matrix_to(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

OriginMode mode_from(const json& j) {
  std::string mode = j.get<std::string>();
  if (mode == "INTERIOR") return OriginMode::Interior;
  if (mode == "VERTEX_ON_AXES") return OriginMode::VertexOnAxes;
  fail(Errc::ParseError, "polytope mode must be INTERIOR or VERTEX_ON_AXES");
}

RationalPolytope polytope_from(const json& j) {
  std::size_t n = field(j, "n").get<std::size_t>();
  OriginMode mode = mode_from(field(j, "mode"));

  bool has_vertices = j.contains("vertices");
  bool has_facets = j.contains("facets");
  if (!has_vertices && !has_facets)
    fail(Errc::ParseError, "polytope needs vertices and/or facets");

  std::vector<RationalVector> vertices;
  if (has_vertices)
    for (const auto& v : j.at("vertices")) vertices.push_back(rational_vector_from(v));
  std::vector<Facet> facets;
  if (has_facets)
    for (const auto& f : j.at("facets"))
      facets.push_back({lattice_from(field(f, "normal")), rational_from(field(f, "c"))});

  if (has_vertices && has_facets)
    return RationalPolytope::from_both(n, mode, std::move(vertices), std::move(facets));
  if (has_vertices) return RationalPolytope::from_vertices(n, mode, std::move(vertices));
  return RationalPolytope::from_facets(n, mode, std::move(facets));
}

json polytope_to(const RationalPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets())
    facets.push_back(json{{"normal", lattice_to(f.normal)}, {"c", f.offset.str()}});
  json out{{"n", p.dim()},
           {"mode", p.mode() == OriginMode::Interior ? "INTERIOR" : "VERTEX_ON_AXES"},
           {"facets", facets}};
  if (p.has_vertices()) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(rational_vector_to(v));
    out["vertices"] = verts;
  }
  return out;
}

GeneratedFiltration generated_from(const json& j) {
  std::vector<GeneratedFiltration::Generator> gens;
  for (const auto& g : field(j, "generators"))
    gens.push_back({polynomial_from(field(g, "poly")), field(g, "weight").get<unsigned>()});
  if (gens.empty()) fail(Errc::ParseError, "generated filtration needs generators");
  RingDomain dom = gens.front().poly.domain();
  if (j.contains("domain") && domain_from(j.at("domain")) != dom)
    fail(Errc::ParseError, "explicit domain disagrees with the generators");

  const json& caps = field(j, "caps");
  GeneratedFiltration::Caps c;
  c.d_max = field(caps, "dmax").get<unsigned>();
  for (const auto& range : field(caps, "box")) {
    if (!range.is_array() || range.size() != 2)
      fail(Errc::ParseError, "box entries must be [lo, hi] pairs");
    c.box.emplace_back(integer_from(range[0]), integer_from(range[1]));
  }
  return GeneratedFiltration(dom, std::move(gens), std::move(c));
}

}  // namespace

RingDomain parse_domain_json(const std::string& text) { return domain_from(parse_text(text)); }

LaurentPolynomial parse_polynomial_json(const std::string& text) {
  return polynomial_from(parse_text(text));
}

RationalPolytope parse_polytope_json(const std::string& text) {
  return polytope_from(parse_text(text));
}

DegreeObject parse_degree_json(const std::string& text) {
  json j = parse_text(text);
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "weighted") {
    RingDomain dom = domain_from(field(j, "domain"));
    return WeightedDegree(dom, rational_vector_from(field(j, "weight")));
  }
  if (kind == "subdegree") {
    RingDomain dom = domain_from(field(j, "domain"));
    std::vector<WeightedDegree> parts;
    for (const auto& part : field(j, "parts")) {
      const json& w = part.is_object() ? field(part, "weight") : part;
      parts.emplace_back(dom, rational_vector_from(w));
    }
    return Subdegree(std::move(parts));
  }
  if (kind == "generated") return generated_from(j);
  if (kind == "polytope") return polytope_from(j);
  fail(Errc::ParseError, "degree kind must be weighted, subdegree, generated or polytope");
}

RingDomain domain_of(const DegreeObject& obj) {
  return std::visit(
      [](const auto& x) -> RingDomain {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, WeightedDegree>) return x.domain;
        else if constexpr (std::is_same_v<T, Subdegree>) return x.domain;
        else if constexpr (std::is_same_v<T, GeneratedFiltration>) return x.domain();
        else return x.ring_domain();
      },
      obj);
}

DegreeFn evaluator_of(const DegreeObject& obj) {
  return std::visit(
      [](const auto& x) -> DegreeFn {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RationalPolytope>) {
          Subdegree s = subdegree_from_polytope(x);
          RationalPolytope p = x;
          return [p, s](const LaurentPolynomial& f) {
            DegreeValue by_scaling = eval_by_scaling(p, f);
            DegreeValue by_parts = eval_subdegree(s, f);
            if (!(by_scaling == by_parts))
              fail(Errc::InternalInvariant, "polytope evaluation routes disagree: " +
                                                by_scaling.str() + " vs " + by_parts.str());
            return by_parts;
          };
        } else {
          return evaluator(x);
        }
      },
      obj);
}

std::string domain_to_json(const RingDomain& dom) { return domain_to(dom).dump(); }
std::string polynomial_to_json(const LaurentPolynomial& p) { return polynomial_to(p).dump(); }

std::string weighted_to_json(const WeightedDegree& d) {
  return json{{"kind", "weighted"},
              {"domain", domain_to(d.domain)},
              {"weight", rational_vector_to(d.weight)}}
      .dump();
}

std::string subdegree_to_json(const Subdegree& s) {
  json parts = json::array();
  for (const auto& p : s.parts) parts.push_back(rational_vector_to(p.weight));
  return json{{"kind", "subdegree"}, {"domain", domain_to(s.domain)}, {"parts", parts}}.dump();
}

std::string polytope_to_json(const RationalPolytope& p) { return polytope_to(p).dump(); }

std::string facets_to_json(const std::vector<Facet>& fs) {
  json facets = json::array();
  for (const auto& f : fs)
    facets.push_back(json{{"normal", lattice_to(f.normal)}, {"c", f.offset.str()}});
  return json{{"facets", facets}}.dump();
}

std::string matrix_to_json(const RationalMatrix& m) { return matrix_to(m).dump(); }

std::string divisor_to_json(const DivisorAtInfinity& d) {
  json comps = json::array();
  for (const auto& c : d.components)
    comps.push_back(json{{"part", c.part_index},
                         {"weight", rational_vector_to(d.minimal.parts[c.part_index].weight)},
                         {"d", c.multiplicity.get_str()},
                         {"coefficient", c.coefficient.str()}});
  return json{{"e", d.scaling_e.get_str()},
              {"components", comps},
              {"count", d.components.size()}}
      .dump();
}

std::string intersection_report_to_json(const IntersectionReport& r) {
  json normals = json::array();
  for (const auto& v : r.normals) normals.push_back(lattice_to(v));
  return json{{"normals", normals},
              {"L", matrix_to(r.linking)},
              {"D", matrix_to(r.boundary)},
              {"I_linking", matrix_to(r.intersection_linking)},
              {"I_fan", matrix_to(r.intersection_fan)},
              {"detL", r.det_linking.str()},
              {"agree", r.agree}}
      .dump();
}

std::string nef_result_to_json(const NefResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates)
    certs.push_back(c ? lattice_to(*c) : json(nullptr));
  return json{{"nef", r.nef},
              {"ample", r.ample},
              {"intersection_values", rational_vector_to(r.intersection_values)},
              {"certificates", certs}}
      .dump();
}

std::string semigroup_to_json(const SemigroupResult& r) {
  json gens = json::array();
  for (const auto& [pt, deg] : r.generators)
    gens.push_back(json{{"point", lattice_to(pt)}, {"degree", deg}});
  return json{{"generators", gens}, {"saturated", r.saturated}}.dump();
}

std::string lattice_points_to_json(const std::vector<LatticeVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(lattice_to(p));
  return a.dump();
}

std::string experiment_report_to_json(const ExperimentReport& r, bool include_runtime) {
  auto instance_to = [](const WeightTupleInstance& inst) {
    json vecs = json::array();
    for (const auto& v : inst.vectors) vecs.push_back(lattice_to(v));
    return json{{"trial", inst.trial}, {"vectors", vecs}};
  };
  json ces = json::array();
  for (const auto& ce : r.counterexamples) ces.push_back(instance_to(ce));
  json out{{"config", json{{"n", r.config.n},
                           {"k_min", r.config.k_min},
                           {"k_max", r.config.k_max},
                           {"bound", r.config.entry_bound},
                           {"trials", r.config.trials},
                           {"seed", r.config.seed}}},
           {"trials_executed", r.trials_executed},
           {"counterexamples", ces},
           {"min_abs_det", r.min_abs_det.str()},
           {"min_instance", instance_to(r.min_instance)}};
  if (include_runtime) out["runtime_ms"] = r.runtime_ms;
  return out.dump();
}

}  // namespace deginf
