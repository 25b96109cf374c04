#include "gapvir/json_io.hpp"

#include <stdexcept>

namespace gapvir {

namespace {

Scalar scalar_from_json(const Json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected a scalar string \"a/b\"");
  return Scalar::parse(j.get<std::string>());
}

GapParam gap_from_json(const Json& j) {
  if (!j.contains("p") || !j.at("p").is_number_integer())
    throw std::invalid_argument("expected an integer field \"p\"");
  return GapParam(j.at("p").get<int>());
}

}  // namespace

Json algebra_element_to_json(const AlgebraElement& e) {
  Json l = Json::object();
  for (const auto& [m, c] : e.l_part()) l[std::to_string(m)] = c.str();
  Json c = Json::array();
  for (const Scalar& s : e.c_part()) c.push_back(s.str());
  return Json{{"p", e.p().value()}, {"L", l}, {"C", c}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  const GapParam p = gap_from_json(j);
  AlgebraElement e(p);
  if (j.contains("L"))
    for (const auto& [key, value] : j.at("L").items())
      e.add_l(std::stol(key), scalar_from_json(value));
  if (j.contains("C")) {
    const Json& c = j.at("C");
    if (!c.is_array() || c.size() != static_cast<std::size_t>(p.value()))
      throw std::invalid_argument("field \"C\" must hold exactly p scalars");
    for (int i = 0; i < p.value(); ++i)
      e.add_c(i, scalar_from_json(c.at(static_cast<std::size_t>(i))));
  }
  return e;
}

Json mois_spec_to_json(const MoisSpec& spec) {
  Json rows = Json::array();
  for (int s = 1; s < spec.p.value(); ++s) {
    Json row = Json::array();
    for (int j = 0; j < spec.p.value(); ++j) row.push_back(spec.F.at(s, j).str());
    rows.push_back(row);
  }
  return Json{{"p", spec.p.value()},
              {"alpha", spec.alpha.str()},
              {"beta", spec.beta.str()},
              {"F", rows}};
}

MoisSpec mois_spec_from_json(const Json& j) {
  const GapParam p = gap_from_json(j);
  Scalar alpha(0), beta(0);
  if (j.contains("alpha")) alpha = scalar_from_json(j.at("alpha"));
  if (j.contains("beta")) beta = scalar_from_json(j.at("beta"));
  FMatrix f(p);
  if (!j.contains("F"))
    throw std::invalid_argument("missing field \"F\"");
  const Json& rows = j.at("F");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(p.value() - 1))
    throw std::invalid_argument("field \"F\" must hold exactly p-1 rows");
  for (int s = 1; s < p.value(); ++s) {
    const Json& row = rows.at(static_cast<std::size_t>(s - 1));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(p.value()))
      throw std::invalid_argument("each row of \"F\" must hold exactly p scalars");
    for (int col = 0; col < p.value(); ++col)
      f.set(s, col, scalar_from_json(row.at(static_cast<std::size_t>(col))));
  }
  return MoisSpec{p, alpha, beta, f};
}

Json highest_weight_to_json(const HighestWeight& hw) {
  Json c = Json::array();
  for (const Scalar& s : hw.c) c.push_back(s.str());
  return Json{{"p", hw.p.value()}, {"h", hw.h.str()}, {"C", c}};
}

HighestWeight highest_weight_from_json(const Json& j) {
  const GapParam p = gap_from_json(j);
  if (!j.contains("h") || !j.contains("C"))
    throw std::invalid_argument("highest weight needs fields \"h\" and \"C\"");
  const Json& c = j.at("C");
  if (!c.is_array() || c.size() != static_cast<std::size_t>(p.value()))
    throw std::invalid_argument("field \"C\" must hold exactly p scalars");
  std::vector<Scalar> values;
  for (const Json& entry : c) values.push_back(scalar_from_json(entry));
  return HighestWeight(p, scalar_from_json(j.at("h")), std::move(values));
}

Json tensor_vector_to_json(const MoisSpec& spec, const TensorVector& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back(Json{{"s", key.first}, {"w", key.second}, {"coeff", c.str()}});
  return Json{{"spec", mois_spec_to_json(spec)}, {"terms", terms}};
}

std::pair<MoisSpec, TensorVector> tensor_vector_from_json(const Json& j) {
  if (!j.contains("spec") || !j.contains("terms"))
    throw std::invalid_argument("tensor vector needs fields \"spec\" and \"terms\"");
  MoisSpec spec = mois_spec_from_json(j.at("spec"));
  TensorVector t;
  for (const Json& entry : j.at("terms")) {
    const long s = entry.at("s").get<long>();
    const long w = entry.at("w").get<long>();
    if (is_gap_multiple(s, spec.p))
      throw std::invalid_argument("tensor index s must lie outside p*Z");
    t.add(s, w, scalar_from_json(entry.at("coeff")));
  }
  return {std::move(spec), std::move(t)};
}

Json weight_vector_to_json(const WeightVector& v) {
  Json out = Json::array();
  for (const auto& [w, c] : v.coords())
    out.push_back(Json{{"w", w}, {"coeff", c.str()}});
  return out;
}

Json verma_vector_to_json(const VermaVector& v) {
  Json out = Json::array();
  for (const auto& [mono, c] : v.coords())
    out.push_back(Json{{"monomial", mono.parts}, {"coeff", c.str()}});
  return out;
}

namespace {

Json condition_to_json(const ValidationReport::Condition& c) {
  Json out{{"passed", c.passed}};
  if (!c.passed) {
    out["witness"] = c.witness;
    out["detail"] = c.detail;
  }
  return out;
}

}  // namespace

Json validation_report_to_json(const ValidationReport& r) {
  return Json{{"valid", r.valid()},
              {"zero_matrix", r.zero_matrix},
              {"condition_I", condition_to_json(r.cond1)},
              {"condition_II", condition_to_json(r.cond2)},
              {"condition_III", condition_to_json(r.cond3)}};
}

Json report_to_json(const Report& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
  return Json{{"passed", r.passed()}, {"checks", r.checks}, {"violations", violations}};
}

Json linkage_graph_to_json(const LinkageGraph& g) {
  Json nodes = Json::array();
  for (int n : g.nodes) nodes.push_back(n);
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"s", e.s}});
  return Json{{"nodes", nodes},
              {"edges", edges},
              {"strongly_connected", g.strongly_connected}};
}

Json reducibility_to_json(const ReducibilityVerdict& v) {
  Json out{{"reducible", v.reducible}, {"description", v.description}};
  if (v.reducible) {
    out["subquotient"] =
        v.kind == ReducibilityVerdict::Subquotient::SpanWithoutIndex
            ? "span_without_index"
            : "quotient_by_line";
    out["special_k"] = v.special_k;
  }
  return out;
}

Json iso_witness_to_json(const IsoWitness& w) {
  Json d = Json::array();
  for (const Scalar& s : w.d) d.push_back(s.str());
  return Json{{"k", w.k}, {"d", d}};
}

Json verma_verdict_to_json(const VermaVerdict& v) {
  Json i = Json::array();
  for (int x : v.I) i.push_back(x);
  return Json{{"I", i}, {"irreducible", v.irreducible}, {"lambda_zero", v.lambda_zero}};
}

}  // namespace gapvir
