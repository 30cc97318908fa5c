#include "harness.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ucayley/cayley.hpp"
#include "ucayley/complex.hpp"
#include "ucayley/constructions.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/structure.hpp"

namespace ucayley::harness {

std::string to_string(Scale s) { return s == Scale::small ? "small" : "medium"; }

Scale parse_scale(std::string_view text) {
  if (text == "small") return Scale::small;
  if (text == "medium") return Scale::medium;
  throw std::invalid_argument("unknown scale '" + std::string(text) + "' (expected small or medium)");
}

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates failures; a check passes when none were recorded.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string out = notes_;
    for (const auto& f : failures_) out += (out.empty() ? "FAILED: " : "; FAILED: ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::string notes_;
};

template <class Body>
CheckResult run_check(std::string id, int criterion, std::string certifies, double budget, Body&& body) {
  CheckResult r{std::move(id), criterion, std::move(certifies), "", budget, 0.0, false};
  Probe probe;
  const auto start = Clock::now();
  try {
    body(probe, Budget{0, budget});
  } catch (const std::exception& e) {
    probe.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  probe.expect(r.seconds <= budget, "over the time budget");
  r.passed = probe.ok();
  r.detail = probe.detail();
  return r;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// Γ(M(3,GF(2))), 𝔇 and greedy_extend(𝔇), shared by criteria 3 and 5.
struct MnfSetup {
  RingHandle ring;
  RingHandle field;
  UGraph graph;
  VertexSet d;
  VertexSet m;
};

MnfSetup mnf_setup() {
  MnfSetup s;
  s.ring = make_ring("M(3,GF(2))");
  s.field = s.ring.base();
  s.graph = build_graph(s.ring);
  s.d = to_vertex_set(s.ring, d_family(3, s.field));
  s.m = greedy_extend(s.graph, s.d);
  return s;
}

std::vector<CheckResult> alpha_formula(const Options& o) {
  return {run_check("alpha-formula", 1, "alpha(Γ(M_n(F_q))) = q^(n^2-n)", 10.0, [&](Probe& p, Budget b) {
    std::vector<std::pair<std::string, std::uint64_t>> cases = {{"M(2,GF(2))", 4}, {"M(2,GF(3))", 9}};
    if (o.scale == Scale::medium) cases.emplace_back("M(2,GF(4))", 16);
    for (const auto& [spec, want] : cases) {
      const std::size_t alpha = independence_number(build_graph(make_ring(spec)), b);
      p.note(spec + " alpha=" + str(alpha));
      p.expect(alpha == want, spec + ": expected " + str(want));
    }
  })};
}

std::vector<CheckResult> m2f_wellcovered(const Options& o) {
  return {run_check("m2f-wellcovered", 2, "every maximal independent set of Γ(M_n(F_q)), n <= 2, has size q^(n^2-n)", 60.0,
                    [&](Probe& p, Budget b) {
                      struct Case {
                        std::string spec;
                        std::uint64_t size;
                      };
                      std::vector<Case> cases;
                      for (unsigned q : {2u, 3u, 4u, 5u}) cases.push_back({"M(1,GF(" + str(q) + "))", 1});
                      cases.push_back({"M(2,GF(2))", 4});
                      cases.push_back({"M(2,GF(3))", 9});
                      for (const auto& c : cases) {
                        WellCoveredOptions opts{b, {}, o.threads};
                        const auto rep = is_well_covered(build_graph(make_ring(c.spec)), opts);
                        p.expect(rep.fully_enumerated, c.spec + ": enumeration did not finish");
                        std::uint64_t total = 0;
                        for (const auto& [size, count] : rep.counts) total += count;
                        p.note(c.spec + " " + str(total) + " sets");
                        p.expect(rep.counts.size() == 1 && rep.counts.begin()->first == c.size,
                                 c.spec + ": a maximal set of size other than " + str(c.size));
                        p.expect(rep.answer == Answer::yes, c.spec + ": not reported well-covered");
                      }
                    })};
}

std::vector<CheckResult> mnf_refute(const Options&) {
  return {run_check("thm-mnf-refute-3-2", 3,
                    "greedy_extend(D) in Γ(M_3(F_2)) is maximal of size < 64 with zeros at (k,2k mod 3)", 120.0,
                    [&](Probe& p, Budget) {
                      const MnfSetup s = mnf_setup();
                      p.note("|D|=" + str(s.d.size()) + " |M|=" + str(s.m.size()));
                      p.expect(is_independent(s.graph, s.d), "D is not independent");
                      p.expect(is_maximal_independent(s.graph, s.m), "M is not maximal");
                      p.expect(s.m.size() < 64, "|M| >= 64");
                      for (Vertex v : s.m) {
                        if (!has_doubled_diagonal_zeros(s.ring.to_matrix(v))) {
                          p.expect(false, "element " + s.ring.describe(v) + " breaks the zero pattern");
                          break;
                        }
                      }
                      const VertexSet big = greedy_extend(s.graph, {});
                      p.note("greedy from empty |M'|=" + str(big.size()));
                      p.expect(big.size() == 64 && is_maximal_independent(s.graph, big),
                               "greedy maximal set from the empty seed should have size 64");
                    })};
}

std::vector<CheckResult> dk_family(const Options&) {
  return {run_check("dk-family", 4, "D is independent and |D| = n(q^(n-1)-1)+1", 30.0, [&](Probe& p, Budget) {
    const std::vector<std::pair<unsigned, unsigned>> cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
    for (const auto& [n, q] : cases) {
      const RingHandle field = make_ring(galois_field(q));
      const auto fam = d_family(n, field);
      const std::uint64_t want = n * (ipow(q, n - 1) - 1) + 1;
      const std::string tag = "(" + str(n) + "," + str(q) + ")";
      p.note(tag + " |D|=" + str(fam.size()));
      p.expect(fam.size() == want, tag + ": expected |D| = " + str(want));
      bool singular = true;
      for (std::size_t i = 0; i < fam.size() && singular; ++i) {
        for (std::size_t j = i + 1; j < fam.size() && singular; ++j) {
          singular = !is_invertible(field, matrix_sub(field, fam[i], fam[j]));
        }
      }
      p.expect(singular, tag + ": a pairwise difference is invertible");
    }
  })};
}

std::vector<CheckResult> comrows(const Options&) {
  return {run_check("comrows-3-2", 5, "row mixes of A in M and D_k in D are singular", 60.0, [&](Probe& p, Budget) {
    const MnfSetup s = mnf_setup();
    std::uint64_t checked = 0, bad = 0;
    for (Vertex a : s.m) {
      const MatrixElem am = s.ring.to_matrix(a);
      for (Vertex d : s.d) {
        const MatrixElem dm = s.ring.to_matrix(d);
        for (unsigned mask = 1; mask < 8; ++mask) {
          std::vector<Vertex> rows;
          for (unsigned i = 0; i < 3; ++i) {
            if (mask >> i & 1) rows.push_back(i);
          }
          ++checked;
          if (is_invertible(s.field, row_mix(am, dm, VertexSet(std::move(rows))))) ++bad;
        }
      }
    }
    p.note(str(checked) + " row mixes");
    p.expect(bad == 0, str(bad) + " invertible row mixes");
  })};
}

CheckResult radical_check(const std::string& id, const std::string& spec, const Options& o) {
  return run_check(id, 6, "maximal sets of Γ(R) are the J-saturated lifts of maximal sets of Γ(R/J)", 30.0,
                   [&](Probe& p, Budget b) {
                     const RingHandle r = make_ring(spec);
                     const VertexSet j = jacobson_radical(r);
                     p.expect(j == jacobson_radical_bruteforce(r), spec + ": structured and scanned radicals differ");
                     const QuotientRing q = quotient_ring(r, j);
                     const UGraph gr = build_graph(r);
                     const UGraph gq = build_graph(q.ring);
                     const auto up = collect_maximal_independent(gr, b, o.threads);
                     const auto down = collect_maximal_independent(gq, b, o.threads);
                     p.expect(up.stats.status == SearchStatus::complete && down.stats.status == SearchStatus::complete,
                              spec + ": enumeration did not finish");
                     std::vector<VertexSet> lifted;
                     for (const auto& s : down.sets) {
                       std::vector<Vertex> reps;
                       for (Vertex v : s) reps.push_back(q.representative[v]);
                       lifted.push_back(radical_saturate(r, j, VertexSet(std::move(reps))));
                     }
                     std::sort(lifted.begin(), lifted.end());
                     p.note(spec + " |J|=" + str(j.size()) + " |R/J|=" + str(q.ring.order()) + " " +
                            str(up.sets.size()) + " maximal sets");
                     p.expect(lifted == up.sets, spec + ": lifted sets differ from the maximal sets of Γ(R)");
                     const auto wr = is_well_covered(gr, {b, {}, o.threads});
                     const auto wq = is_well_covered(gq, {b, {}, o.threads});
                     p.note("well-covered " + to_string(wr.answer) + "/" + to_string(wq.answer));
                     p.expect(wr.answer == wq.answer && wr.answer != Answer::inconclusive,
                              spec + ": well-covered verdicts disagree");
                   });
}

std::vector<CheckResult> radical_correspondence(const Options& o) {
  return {radical_check("prop-rj-z4", "Z(4)", o), radical_check("prop-rj-z8", "Z(8)", o),
          radical_check("prop-rj-z12", "Z(12)", o), radical_check("prop-rj-t2f2", "T(2,GF(2))", o)};
}

std::vector<CheckResult> avoidance(const Options& o) {
  return {run_check("partner-ab", 7, "for nonzero A, B is a non-unit and A-B is a unit", 30.0, [&](Probe& p, Budget) {
    std::uint64_t checked = 0;
    auto test = [&](const RingHandle& r, Elem a) {
      const MatrixElem b = avoidance_partner(r.to_matrix(a), r.base());
      const Elem bi = r.from_matrix(b);
      ++checked;
      if (r.is_unit(bi) || !r.is_unit(r.sub(a, bi))) {
        p.expect(false, r.name() + ": partner fails for A = " + r.describe(a));
      }
    };
    for (const char* spec : {"M(2,GF(2))", "M(2,GF(3))"}) {
      const RingHandle r = make_ring(spec);
      for (Elem a = 1; a < r.order(); ++a) test(r, a);
    }
    const RingHandle r3 = make_ring("M(3,GF(3))");
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<Elem> pick(1, static_cast<Elem>(r3.order() - 1));
    const int samples = o.scale == Scale::medium ? 5000 : 500;
    for (int i = 0; i < samples; ++i) test(r3, pick(rng));
    p.note(str(checked) + " matrices, seed " + str(o.seed));
  })};
}

std::vector<CheckResult> product_refutation(const Options& o) {
  return {run_check("prop-prod-z2-m2f2", 8, "Γ(R x M_n(F)) has maximal sets N and M x M_n(F) of different sizes", 60.0,
                    [&](Probe& p, Budget b) {
                      const RingHandle field = make_ring("GF(2)");
                      struct Case {
                        std::string base;
                        std::size_t n_size;
                        std::size_t full_size;
                      };
                      for (const Case& c : {Case{"Z(2)", 11, 16}, Case{"Z(3)", 12, 16}}) {
                        const RingHandle base = make_ring(c.base);
                        const RingHandle prod = make_ring("prod(" + c.base + ",M(2,GF(2)))");
                        const UGraph g = build_graph(prod);
                        const ProductWitness w = product_witness(base, 2, field);
                        p.note(c.base + " |N|=" + str(w.witness.size()) + " |MxM_2|=" + str(w.full_fiber.size()));
                        p.expect(w.witness.size() == c.n_size && is_maximal_independent(g, w.witness),
                                 c.base + ": N is not maximal of size " + str(c.n_size));
                        p.expect(w.full_fiber.size() == c.full_size && is_maximal_independent(g, w.full_fiber),
                                 c.base + ": M x M_2(F) is not maximal of size " + str(c.full_size));
                        const auto rep = is_well_covered(g, {b, {}, o.threads});
                        p.expect(rep.answer == Answer::no, c.base + ": enumeration did not answer no");
                      }
                    })};
}

std::vector<CheckResult> conjunction(const Options&) {
  return {run_check("conj-prod", 9, "Γ(R1 x R2) is the conjunction product of Γ(R1) and Γ(R2)", 10.0,
                    [&](Probe& p, Budget) {
                      for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
                               {"Z(2)", "Z(3)"}, {"Z(2)", "M(2,GF(2))"}}) {
                        const RingHandle r1 = make_ring(a), r2 = make_ring(b);
                        const RingHandle pr = make_ring("prod(" + a + "," + b + ")");
                        const UGraph tensor = conjunction_product(build_graph(r1), build_graph(r2));
                        std::vector<Vertex> perm(tensor.vertex_count());
                        for (Elem x = 0; x < r1.order(); ++x) {
                          for (Elem y = 0; y < r2.order(); ++y) {
                            const Elem parts[2] = {x, y};
                            perm[x * r2.order() + y] = pr.from_components(parts);
                          }
                        }
                        const UGraph direct = build_graph(pr);
                        p.note(pr.name() + " " + str(direct.edge_count()) + " edges");
                        p.expect(relabel(tensor, perm) == direct, pr.name() + ": graphs differ");
                      }
                    })};
}

}  // namespace

std::vector<std::string> catalog() {
  std::vector<std::string> out;
  for (int m = 2; m <= 16; ++m) out.push_back("Z(" + std::to_string(m) + ")");
  for (int q : {2, 3, 4, 5, 7, 8, 9}) out.push_back("GF(" + std::to_string(q) + ")");
  for (const char* s : {"T(2,GF(2))", "T(3,GF(2))", "T(2,GF(3))", "M(2,GF(2))", "M(2,GF(3))", "prod(Z(2),Z(2))",
                        "prod(Z(2),Z(2),Z(2))", "prod(Z(2),Z(3))", "prod(Z(3),Z(3))", "M(2,Z(4))"}) {
    out.emplace_back(s);
  }
  return out;
}

namespace {

std::vector<CheckResult> classify_vs_enum(const Options& o) {
  return {run_check("classify-vs-enum", 10, "the classification agrees with exhaustive enumeration on the catalog",
                    600.0, [&](Probe& p, Budget b) {
                      std::size_t yes = 0, no = 0;
                      for (const auto& text : catalog()) {
                        const RingSpec spec = parse_spec(text);
                        const Verdict v = classify_well_covered(spec);
                        const auto rep = is_well_covered(build_graph(make_ring(spec)), {b, {}, o.threads});
                        p.expect(rep.answer != Answer::inconclusive, text + ": enumeration did not finish");
                        p.expect(rep.answer == v.answer, text + ": classify says " + to_string(v.answer) +
                                                             ", enumeration says " + to_string(rep.answer));
                        (rep.answer == Answer::yes ? yes : no) += 1;
                      }
                      p.note(str(yes) + " yes, " + str(no) + " no");
                    })};
}

bool boolean_ring(const RingHandle& r) {
  if (r.order() < 2 || !r.is_commutative()) return false;
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) != x) return false;
  }
  return true;
}

std::vector<CheckResult> cm_obstructions(const Options& o) {
  return {run_check("cm-obstructions", 11,
                    "CM obstructions and shellings of ind(Γ(R)); Gorenstein exactly for Z_2^k", 300.0,
                    [&](Probe& p, Budget b) {
                      for (const char* spec : {"M(2,GF(2))", "Z(4)"}) {
                        const Complex c = independence_complex(build_graph(make_ring(spec)), b);
                        const Complex top = pure_skeleton(c, c.dim());
                        const Codim1Result conn = codim1_connected(top);
                        p.note(std::string(spec) + " top skeleton: " + str(conn.components.size()) + " components");
                        p.expect(!conn.connected, std::string(spec) + ": top skeleton is connected in codimension 1");
                      }
                      std::vector<std::string> shellable = {"Z(2)", "prod(Z(2),Z(2))", "prod(Z(2),Z(2),Z(2))",
                                                            "GF(2)", "GF(3)", "GF(4)", "GF(5)"};
                      if (o.scale == Scale::medium) {
                        for (const char* s : {"GF(7)", "GF(8)", "GF(9)"}) shellable.emplace_back(s);
                      }
                      for (const auto& spec : shellable) {
                        const Complex c = independence_complex(build_graph(make_ring(spec)), b);
                        const ShellingResult sh = find_shelling(c, b);
                        p.expect(sh.status == ShellingStatus::found && verify_shelling(c, sh.order),
                                 spec + ": no verified shelling");
                        p.expect(classify_cm(parse_spec(spec)).answer == Answer::yes, spec + ": classify_cm is not yes");
                      }
                      p.note(str(shellable.size()) + " shellings verified");
                      std::size_t gorenstein = 0;
                      for (const auto& text : catalog()) {
                        const RingSpec spec = parse_spec(text);
                        const bool yes = classify_gorenstein(spec).answer == Answer::yes;
                        gorenstein += yes;
                        p.expect(yes == boolean_ring(make_ring(spec)), text + ": Gorenstein verdict is " +
                                                                          (yes ? "yes" : "no"));
                      }
                      p.note(str(gorenstein) + " Gorenstein in the catalog");
                    })};
}

std::vector<CheckResult> unit_count(const Options&) {
  return {run_check("unit-count", 12, "|U(M_n(F_q))| = (q^n-1)(q^n-q)...(q^n-q^(n-1))", 30.0, [&](Probe& p, Budget) {
    for (const auto& [n, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
      const RingHandle r = make_ring(matrix_ring(n, galois_field(q)));
      std::uint64_t want = 1;
      for (unsigned i = 0; i < n; ++i) want *= ipow(q, n) - ipow(q, i);
      std::uint64_t counted = 0;
      for (Elem x = 0; x < r.order(); ++x) counted += r.is_unit(x);
      p.note(r.name() + " " + str(counted));
      p.expect(counted == want, r.name() + ": expected " + str(want));
    }
  })};
}

}  // namespace

std::vector<CheckResult> run_criterion(int criterion, const Options& o) {
  switch (criterion) {
    case 1: return alpha_formula(o);
    case 2: return m2f_wellcovered(o);
    case 3: return mnf_refute(o);
    case 4: return dk_family(o);
    case 5: return comrows(o);
    case 6: return radical_correspondence(o);
    case 7: return avoidance(o);
    case 8: return product_refutation(o);
    case 9: return conjunction(o);
    case 10: return classify_vs_enum(o);
    case 11: return cm_obstructions(o);
    case 12: return unit_count(o);
    default: throw std::out_of_range("criterion must be 1.." + std::to_string(kCriterionCount));
  }
}

std::vector<CheckResult> run_all(const Options& options, const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> out;
  for (int c = 1; c <= kCriterionCount; ++c) {
    for (auto& r : run_criterion(c, options)) {
      if (progress) progress(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

nlohmann::json report_json(const std::vector<CheckResult>& results, const Options& options, bool with_timings) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json j = {{"id", r.id},
                        {"criterion", r.criterion},
                        {"certifies", r.certifies},
                        {"detail", r.detail},
                        {"budget_seconds", r.budget_seconds},
                        {"passed", r.passed}};
    if (with_timings) j["seconds"] = r.seconds;
    checks.push_back(std::move(j));
    all = all && r.passed;
  }
  return {{"checks", checks}, {"passed", all}, {"scale", to_string(options.scale)}, {"seed", options.seed}};
}

}  // namespace ucayley::harness
