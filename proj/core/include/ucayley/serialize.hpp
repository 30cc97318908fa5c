#pragma once

#include <nlohmann/json.hpp>

#include "ucayley/cayley.hpp"
#include "ucayley/complex.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/structure.hpp"

namespace ucayley {

// Every object uses nlohmann::json's sorted keys, so dump() is canonical.

/// {spec, order, unit_count, radical_size}
nlohmann::json ring_json(const RingHandle& r);
/// {ring, question, answer, clause, factors:[[n,q],...]} (+ witness_hint when set)
nlohmann::json verdict_json(const RingSpec& spec, const Verdict& v);
/// {N, edges:[[u,v],...]}
nlohmann::json graph_json(const UGraph& g);
/// {answer, alpha, alpha_exact, fully_enumerated, witness_small, witness_large, counts:[[size,count],...]}
nlohmann::json report_json(const WellCoveredReport& r);
/// {N, dim, pure, facets:[[...],...]}
nlohmann::json complex_json(const Complex& c);
nlohmann::json vertex_set_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j);

}  // namespace ucayley
