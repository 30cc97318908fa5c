#include "ucayley/serialize.hpp"

namespace ucayley {

using nlohmann::json;

json ring_json(const RingHandle& r) {
  return json{{"spec", r.name()},
              {"order", r.order()},
              {"unit_count", r.unit_count()},
              {"radical_size", jacobson_radical(r).size()}};
}

json verdict_json(const RingSpec& spec, const Verdict& v) {
  json factors = json::array();
  for (const auto& f : v.factors) factors.push_back(json::array({f.n, f.q}));
  json out{{"ring", to_string(spec)},
           {"question", to_string(v.question)},
           {"answer", to_string(v.answer)},
           {"clause", v.clause},
           {"factors", factors}};
  if (!v.witness_hint.empty()) out["witness_hint"] = v.witness_hint;
  return out;
}

json graph_json(const UGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"N", g.vertex_count()}, {"edges", edges}};
}

json vertex_set_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

VertexSet vertex_set_from_json(const json& j) { return VertexSet(j.get<std::vector<Vertex>>()); }

json report_json(const WellCoveredReport& r) {
  json counts = json::array();
  for (const auto& [size, count] : r.counts) counts.push_back(json::array({size, count}));
  return json{{"answer", to_string(r.answer)},
              {"alpha", r.alpha},
              {"alpha_exact", r.alpha_exact},
              {"fully_enumerated", r.fully_enumerated},
              {"witness_small", r.witness_small ? vertex_set_json(*r.witness_small) : json(nullptr)},
              {"witness_large", r.witness_large ? vertex_set_json(*r.witness_large) : json(nullptr)},
              {"counts", counts}};
}

json complex_json(const Complex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(vertex_set_json(f));
  return json{{"N", c.vertex_count()}, {"dim", c.dim()}, {"pure", is_pure(c)}, {"facets", facets}};
}

}  // namespace ucayley
