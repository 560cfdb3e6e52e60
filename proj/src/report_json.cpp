#include "prismdom/report_json.hpp"

namespace prismdom {

using nlohmann::json;

json edges_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return edges;
}

json to_json(const SweepMode& mode) {
  if (mode.kind == SweepMode::Kind::exhaustive) return json{{"kind", "exhaustive"}};
  return json{{"kind", "sampled"}, {"count", mode.count}, {"seed", mode.seed}};
}

json to_json(const SweepResult& r, Classification c) {
  json histogram = json::object();
  for (auto [value, count] : r.histogram)
    histogram[std::to_string(value)] = count;
  return json{
      {"n", r.n},
      {"p", r.p.str()},
      {"mode", to_json(r.mode)},
      {"base_value", r.base_value},
      {"histogram", histogram},
      {"min", r.min_value},
      {"max", r.max_value},
      {"witness_min", r.witness_min.image()},
      {"witness_max", r.witness_max.image()},
      {"classification", std::string(to_string(c))},
      {"provenance", r.mode.kind == SweepMode::Kind::exhaustive
                         ? "exhaustive"
                         : "sampled evidence"},
  };
}

static const char* quantity_name(Certificate::Quantity q) {
  switch (q) {
    case Certificate::Quantity::base_gamma: return "gamma(G)";
    case Certificate::Quantity::base_gamma_p: return "gamma_p(G)";
    case Certificate::Quantity::prism_gamma: return "gamma(piG)";
    case Certificate::Quantity::prism_gamma_p: return "gamma_p(piG)";
    case Certificate::Quantity::prism_profile_value: return "profile(piG)[k]";
  }
  return "?";
}

static const char* relation_name(Certificate::Relation r) {
  switch (r) {
    case Certificate::Relation::eq: return "==";
    case Certificate::Relation::ne: return "!=";
    case Certificate::Relation::le: return "<=";
    case Certificate::Relation::ge: return ">=";
  }
  return "?";
}

json to_json(const Certificate& cert) {
  json out{
      {"n", cert.graph.n()},
      {"edges", edges_json(cert.graph)},
      {"quantity", quantity_name(cert.quantity)},
      {"claimed_relation", relation_name(cert.relation)},
      {"bound", cert.bound},
      {"value", cert.value},
      {"witness", cert.witness.to_vector()},
      {"note", cert.note},
  };
  if (cert.pi) out["pi"] = cert.pi->image();
  if (cert.p) out["p"] = cert.p->str();
  if (cert.profile_k >= 0) out["profile_k"] = cert.profile_k;
  return out;
}

json to_json(const VerificationReport& rep) {
  json out{
      {"claim", rep.claim},
      {"instance", rep.instance},
      {"mode", rep.mode},
      {"verdict", std::string(to_string(rep.verdict))},
  };
  if (rep.certificate) out["certificate"] = to_json(*rep.certificate);
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  if (rep.threshold_value >= 0) out["threshold_value"] = rep.threshold_value;
  auto side = [](const VerificationReport::Prop4Side& s) {
    return json{{"vertex", s.vertex},
                {"overlap", s.overlap},
                {"condition", s.condition},
                {"holds", s.holds},
                {"sufficiency_violated", s.sufficiency_violated}};
  };
  if (rep.fixed_argmax) out["fixed_argmax"] = side(*rep.fixed_argmax);
  if (rep.existential_argmax) out["existential_argmax"] = side(*rep.existential_argmax);
  return out;
}

}  // namespace prismdom
