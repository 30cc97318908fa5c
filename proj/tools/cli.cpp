#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

#include "harness.hpp"
#include "ucayley/cayley.hpp"
#include "ucayley/complex.hpp"
#include "ucayley/constructions.hpp"
#include "ucayley/error.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/serialize.hpp"
#include "ucayley/structure.hpp"

namespace ucayley::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string ring;
  std::string format = "text";
  std::uint64_t budget_nodes = 100'000'000;
  double budget_seconds = 300.0;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_order = RingLimits{}.max_order;
  std::size_t max_vertices = GraphLimits{}.max_vertices;

  Budget budget() const { return {budget_nodes, budget_seconds}; }
  RingLimits ring_limits() const {
    RingLimits l;
    l.max_order = max_order;
    return l;
  }
  GraphLimits graph_limits() const { return {max_vertices}; }
  bool json_mode() const { return format == "json"; }
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void load_env_defaults(RunConfig& cfg) {
  if (const char* v = std::getenv("UCAYLEY_BUDGET_NODES")) {
    try {
      cfg.budget_nodes = std::stoull(v);
    } catch (const std::exception&) {
      throw UsageError("UCAYLEY_BUDGET_NODES is not a number");
    }
    if (cfg.budget_nodes == 0) throw UsageError("UCAYLEY_BUDGET_NODES must be positive");
  }
  if (const char* v = std::getenv("UCAYLEY_BUDGET_SECONDS")) {
    try {
      cfg.budget_seconds = std::stod(v);
    } catch (const std::exception&) {
      throw UsageError("UCAYLEY_BUDGET_SECONDS is not a number");
    }
    if (!(cfg.budget_seconds > 0)) throw UsageError("UCAYLEY_BUDGET_SECONDS must be positive");
  }
}

RingHandle need_ring(const RunConfig& cfg) {
  if (cfg.ring.empty()) throw UsageError("--ring is required for this command");
  return make_ring(parse_spec(cfg.ring), cfg.ring_limits());
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* a : allowed) {
    if (cfg.format == a) return;
  }
  throw UsageError("--format " + cfg.format + " is not supported by '" + cmd + "'");
}

std::string join_sizes(const std::map<std::size_t, std::uint64_t>& counts) {
  std::string s;
  for (const auto& [size, count] : counts) {
    if (!s.empty()) s += ", ";
    s += std::to_string(count) + " of size " + std::to_string(size);
  }
  return s;
}

std::vector<Elem> parse_coeffs(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<Elem>(std::stoul(item)));
  }
  return out;
}

int cmd_ring(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "ring");
  const RingHandle r = need_ring(cfg);
  json j = ring_json(r);
  j["commutative"] = r.is_commutative();
  if (cfg.json_mode()) {
    out << j.dump() << "\n";
  } else {
    out << "ring         " << r.name() << "\n"
        << "order        " << r.order() << "\n"
        << "units        " << r.unit_count() << "\n"
        << "radical      " << j["radical_size"].get<std::size_t>() << "\n"
        << "commutative  " << (r.is_commutative() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const RingHandle r = need_ring(cfg);
  UGraph g = build_graph(r, cfg.graph_limits());
  if (cfg.format == "dot") {
    std::vector<std::string> labels;
    for (Elem x = 0; x < r.order(); ++x) labels.push_back(r.describe(x));
    g.set_labels(std::move(labels));
    out << export_dot(g);
  } else if (cfg.json_mode()) {
    json j = graph_json(g);
    j["ring"] = r.name();
    out << j.dump() << "\n";
  } else {
    out << "ring      " << r.name() << "\n"
        << "vertices  " << g.vertex_count() << "\n"
        << "edges     " << g.edge_count() << "\n";
    if (auto d = g.regular_degree()) out << "degree    " << *d << " (regular)\n";
  }
  return kExitOk;
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "alpha");
  const RingHandle r = need_ring(cfg);
  const AlphaResult a = maximum_independent_set(build_graph(r, cfg.graph_limits()), cfg.budget());
  if (cfg.json_mode()) {
    out << json{{"ring", r.name()}, {"alpha", a.alpha}, {"exact", a.exact}, {"witness", vertex_set_json(a.witness)}}
               .dump()
        << "\n";
  } else if (a.exact) {
    out << a.alpha << "\n";
  } else {
    out << "at least " << a.alpha << " (budget exhausted)\n";
  }
  return a.exact ? kExitOk : kExitInconclusive;
}

int cmd_wellcovered(const RunConfig& cfg, bool use_seeds, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "wellcovered");
  const RingHandle r = need_ring(cfg);
  WellCoveredOptions opts{cfg.budget(), {}, cfg.threads};
  if (use_seeds) opts.seeds = refutation_seeds(r, cfg.graph_limits());
  const WellCoveredReport rep = is_well_covered(build_graph(r, cfg.graph_limits()), opts);
  if (cfg.json_mode()) {
    json j = report_json(rep);
    j["ring"] = r.name();
    out << j.dump() << "\n";
  } else {
    out << to_string(rep.answer) << "\n";
    out << "alpha    " << rep.alpha << (rep.alpha_exact ? "" : " (lower bound)") << "\n";
    if (rep.witness_small) out << "witness  " << rep.witness_small->to_string() << "\n";
    if (rep.fully_enumerated) out << "maximal  " << join_sizes(rep.counts) << "\n";
  }
  return rep.answer == Answer::inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& question, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "classify");
  if (cfg.ring.empty()) throw UsageError("--ring is required for this command");
  const RingSpec spec = parse_spec(cfg.ring);
  const Verdict v = classify(spec, parse_question(question));
  if (cfg.json_mode()) {
    out << verdict_json(spec, v).dump() << "\n";
  } else {
    out << to_string(v.answer) << " (" << v.clause << ")\n";
    if (!v.witness_hint.empty()) out << "witness  " << v.witness_hint << "\n";
  }
  return kExitOk;
}

int cmd_radical(const RunConfig& cfg, const std::string& method, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "radical");
  const RingHandle r = need_ring(cfg);
  VertexSet j;
  if (method == "structured") {
    j = jacobson_radical_structured(r);
  } else if (method == "scan") {
    j = jacobson_radical_bruteforce(r);
  } else {
    j = jacobson_radical(r);
  }
  std::vector<std::string> text;
  for (Vertex v : j) text.push_back(r.describe(v));
  if (cfg.json_mode()) {
    out << json{{"ring", r.name()}, {"size", j.size()}, {"elements", vertex_set_json(j)}, {"described", text}}.dump()
        << "\n";
  } else {
    out << "size      " << j.size() << "\n"
        << "elements  " << j.to_string() << "\n"
        << "quotient  order " << r.order() / j.size() << "\n";
  }
  return kExitOk;
}

int cmd_complex(const RunConfig& cfg, bool list_facets, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "complex");
  const RingHandle r = need_ring(cfg);
  const Complex c = independence_complex(build_graph(r, cfg.graph_limits()), cfg.budget());
  const Complex top = c.is_void() ? c : pure_skeleton(c, c.dim());
  const Codim1Result conn = codim1_connected(top);
  const ShellingResult sh = is_pure(c) ? find_shelling(c, cfg.budget()) : ShellingResult{};
  const std::string shelling = is_pure(c) ? to_string(sh.status) : "not pure";
  if (cfg.json_mode()) {
    json j = complex_json(c);
    j["ring"] = r.name();
    j["top_skeleton_codim1_connected"] = conn.connected;
    j["shelling"] = shelling;
    if (sh.status == ShellingStatus::found) j["shelling_order"] = sh.order;
    out << j.dump() << "\n";
  } else {
    out << "facets    " << c.facet_count() << "\n"
        << "dim       " << c.dim() << "\n"
        << "pure      " << (is_pure(c) ? "yes" : "no") << "\n"
        << "top skeleton codim-1 connected  " << (conn.connected ? "yes" : "no") << " (" << conn.components.size()
        << " components)\n"
        << "shelling  " << shelling << (sh.reason.empty() ? "" : ": " + sh.reason) << "\n";
    if (list_facets) {
      for (const auto& f : c.facets()) out << f.to_string() << "\n";
    }
  }
  const bool undecided = is_pure(c) && sh.status == ShellingStatus::not_found_within_budget;
  return undecided ? kExitInconclusive : kExitOk;
}

struct ConstructArgs {
  std::string kind;
  unsigned n = 2;
  unsigned q = 2;
  unsigned k = 1;
  unsigned l = 1;
  unsigned row = 0;
  std::string coeffs;
  std::string matrix;
};

int cmd_construct(const RunConfig& cfg, const ConstructArgs& a, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "construct");
  const RingHandle field = make_ring(galois_field(a.q));
  std::vector<MatrixElem> mats;
  std::vector<std::pair<std::string, VertexSet>> sets;
  json extra = json::object();
  if (a.kind == "dk") {
    std::vector<Elem> c = parse_coeffs(a.coeffs);
    if (c.empty()) c.assign(a.n - 1, field.one());
    mats.push_back(reduced_diagonal({a.n, a.k, a.l, c}, field));
  } else if (a.kind == "d-family") {
    mats = d_family(a.n, field);
  } else if (a.kind == "partner") {
    if (a.matrix.empty()) throw UsageError("--matrix is required for --kind partner");
    const MatrixElem m = MatrixElem::parse(a.matrix);
    const MatrixElem b = avoidance_partner(m, field);
    mats.push_back(b);
    extra["b_unit"] = is_invertible(field, b);
    extra["a_minus_b_unit"] = is_invertible(field, matrix_sub(field, m, b));
  } else if (a.kind == "permuted-identity") {
    mats.push_back(permuted_identity(a.n, field));
  } else if (a.kind == "zero-row") {
    const RingHandle m = make_ring(matrix_ring(a.n, galois_field(a.q)), cfg.ring_limits());
    sets.emplace_back("zero_row", zero_row_family(m, a.row));
  } else if (a.kind == "greedy-d") {
    const RingHandle m = make_ring(matrix_ring(a.n, galois_field(a.q)), cfg.ring_limits());
    const UGraph g = build_graph(m, cfg.graph_limits());
    const VertexSet d = to_vertex_set(m, d_family(a.n, field));
    const VertexSet ext = greedy_extend(g, d);
    sets.emplace_back("maximal", ext);
    bool pattern = true;
    for (Vertex v : ext) pattern = pattern && has_doubled_diagonal_zeros(m.to_matrix(v));
    extra["zero_pattern"] = pattern;
  } else if (a.kind == "product-witness") {
    const RingHandle r = need_ring(cfg);
    const ProductWitness w = product_witness(r, a.n, field, cfg.graph_limits());
    sets.emplace_back("N", w.witness);
    sets.emplace_back("full_fiber", w.full_fiber);
    sets.emplace_back("base_maximal", w.base_maximal);
  } else {
    throw UsageError("unknown --kind '" + a.kind + "'");
  }
  if (cfg.json_mode()) {
    json j = extra;
    j["kind"] = a.kind;
    if (!mats.empty()) {
      json arr = json::array();
      for (const auto& m : mats) arr.push_back(m.to_string());
      j["matrices"] = arr;
    }
    for (const auto& [name, s] : sets) j[name] = vertex_set_json(s);
    out << j.dump() << "\n";
  } else {
    for (const auto& m : mats) out << m.to_string() << "\n";
    for (const auto& [name, s] : sets) out << name << " (" << s.size() << ") " << s.to_string() << "\n";
    for (const auto& [key, value] : extra.items()) out << key << " " << (value.get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, const std::string& what, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "export");
  const RingHandle r = need_ring(cfg);
  const UGraph g = build_graph(r, cfg.graph_limits());
  std::string text;
  if (what == "edge") {
    text = export_stanley_reisner(g);
  } else if (what == "sr") {
    text = export_stanley_reisner(independence_complex(g, cfg.budget()));
  } else {
    throw UsageError("--what must be edge or sr");
  }
  if (cfg.json_mode()) {
    out << json{{"ring", r.name()}, {"what", what}, {"macaulay2", text}}.dump() << "\n";
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& scale, const std::vector<int>& criteria, bool timings,
               std::ostream& out) {
  require_format(cfg, {"text", "json"}, "verify-paper");
  harness::Options opts{harness::parse_scale(scale), cfg.seed, cfg.threads};
  std::vector<harness::CheckResult> results;
  auto show = [&](const harness::CheckResult& r) {
    if (cfg.json_mode()) return;
    out << (r.passed ? "PASS " : "FAIL ") << std::to_string(r.criterion) << " " << r.id << "  " << r.certifies;
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    if (timings) out << "  " << r.seconds << "s/" << r.budget_seconds << "s";
    out << "\n";
  };
  if (criteria.empty()) {
    results = harness::run_all(opts, show);
  } else {
    for (int c : criteria) {
      for (auto& r : harness::run_criterion(c, opts)) {
        show(r);
        results.push_back(std::move(r));
      }
    }
  }
  const json report = harness::report_json(results, opts, timings);
  if (cfg.json_mode()) {
    out << report.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return report["passed"].get<bool>() ? kExitOk : kExitError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    load_env_defaults(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  CLI::App app{"Unitary Cayley graphs of finite rings: construction, independent sets, classification", "ucayley"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring", cfg.ring, "Ring spec, e.g. \"M(2,GF(3))\" or \"prod(Z(2),Z(3))\"");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--budget-nodes", cfg.budget_nodes, "Search node limit (env UCAYLEY_BUDGET_NODES)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock limit per search (env UCAYLEY_BUDGET_SECONDS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--max-order", cfg.max_order, "Largest ring order to build")->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", cfg.max_vertices, "Largest graph to build")->check(CLI::PositiveNumber);

  auto* ring = app.add_subcommand("ring", "Order, units and radical size of a ring");
  auto* graph = app.add_subcommand("graph", "Build the unitary Cayley graph");
  auto* alpha = app.add_subcommand("alpha", "Independence number");
  auto* wc = app.add_subcommand("wellcovered", "Decide well-coveredness by enumeration");
  bool use_seeds = false;
  wc->add_flag("--seeds", use_seeds, "Try refuting seed sets before enumerating");
  auto* cls = app.add_subcommand("classify", "Answer from the classification theorems");
  std::string question = "wellcovered";
  cls->add_option("--question", question, "wellcovered | cm | gorenstein")
      ->check(CLI::IsMember({"wellcovered", "cm", "gorenstein"}));
  auto* rad = app.add_subcommand("radical", "Jacobson radical");
  std::string method = "auto";
  rad->add_option("--method", method, "auto | structured | scan")->check(CLI::IsMember({"auto", "structured", "scan"}));
  auto* cpx = app.add_subcommand("complex", "Independence complex, connectivity and shelling");
  bool list_facets = false;
  cpx->add_flag("--facets", list_facets, "List the facets");
  auto* con = app.add_subcommand("construct", "Matrices and sets from the refutation constructions");
  ConstructArgs ca;
  con->add_option("--kind", ca.kind, "dk | d-family | partner | permuted-identity | zero-row | greedy-d | product-witness")
      ->required();
  con->add_option("--n", ca.n, "Matrix size")->check(CLI::Range(1u, 8u));
  con->add_option("--q", ca.q, "Field order");
  con->add_option("--k", ca.k, "Diagonal shift, 1-based");
  con->add_option("--l", ca.l, "Zeroed row, 1-based");
  con->add_option("--row", ca.row, "Zero row for zero-row, 0-based");
  con->add_option("--coeffs", ca.coeffs, "Comma-separated field elements a_1..a_{n-1}");
  con->add_option("--matrix", ca.matrix, "Matrix as \"a,b;c,d\"");
  auto* exp = app.add_subcommand("export", "Macaulay2 edge ideal or Stanley-Reisner ideal");
  std::string what = "edge";
  exp->add_option("--what", what, "edge | sr")->check(CLI::IsMember({"edge", "sr"}));
  auto* ver = app.add_subcommand("verify-paper", "Run every verification check");
  std::string scale = "small";
  std::vector<int> criteria;
  bool timings = false;
  ver->add_option("--scale", scale, "small | medium")->check(CLI::IsMember({"small", "medium"}));
  ver->add_option("--criterion", criteria, "Run only these criteria (repeatable)")->check(CLI::Range(1, 12));
  ver->add_flag("--timings", timings, "Include wall-clock timings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  auto fail = [&](const std::string& msg, int code) {
    if (cfg.json_mode()) out << json{{"error", msg}, {"exit_code", code}}.dump() << "\n";
    err << "error: " << msg << "\n";
    return code;
  };

  try {
    if (ring->parsed()) return cmd_ring(cfg, out);
    if (graph->parsed()) return cmd_graph(cfg, out);
    if (alpha->parsed()) return cmd_alpha(cfg, out);
    if (wc->parsed()) return cmd_wellcovered(cfg, use_seeds, out);
    if (cls->parsed()) return cmd_classify(cfg, question, out);
    if (rad->parsed()) return cmd_radical(cfg, method, out);
    if (cpx->parsed()) return cmd_complex(cfg, list_facets, out);
    if (con->parsed()) return cmd_construct(cfg, ca, out);
    if (exp->parsed()) return cmd_export(cfg, what, out);
    if (ver->parsed()) return cmd_verify(cfg, scale, criteria, timings, out);
  } catch (const BudgetExceeded& e) {
    return fail(e.what(), kExitInconclusive);
  } catch (const UsageError& e) {
    if (!cfg.json_mode()) err << app.help() << "\n";
    return fail(e.what(), kExitError);
  } catch (const std::exception& e) {
    return fail(e.what(), kExitError);
  }
  return fail("no command given", kExitError);
}

}  // namespace ucayley::cli
