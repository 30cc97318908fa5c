#include "ucayley/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucayley {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Question q) {
  switch (q) {
    case Question::well_covered: return "wellcovered";
    case Question::cohen_macaulay: return "cm";
    case Question::gorenstein: return "gorenstein";
  }
  return "?";
}

Question parse_question(std::string_view text) {
  if (text == "wellcovered" || text == "well-covered") return Question::well_covered;
  if (text == "cm" || text == "cohen-macaulay") return Question::cohen_macaulay;
  if (text == "gorenstein") return Question::gorenstein;
  throw std::invalid_argument("unknown question '" + std::string(text) + "' (expected wellcovered, cm, gorenstein)");
}

namespace {

void collect(const RingSpec& spec, FactorList& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          for (auto p : prime_divisors(node.modulus)) out.push_back({1, p});
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          out.push_back({1, node.order});
        } else if constexpr (std::is_same_v<T, TriangularSpec>) {
          const std::uint64_t q = node.base->is_galois_field()
                                      ? std::get<GaloisFieldSpec>(node.base->node).order
                                      : std::get<IntegersModSpec>(node.base->node).modulus;
          for (unsigned i = 0; i < node.size; ++i) out.push_back({1, q});
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          FactorList inner;
          collect(*node.base, inner);
          for (auto f : inner) out.push_back({f.n * node.size, f.q});
        } else {
          for (const auto& f : node.factors) collect(f, out);
        }
      },
      spec.node);
}

bool all_z2(const FactorList& f) {
  return std::all_of(f.begin(), f.end(), [](const SimpleFactor& s) { return s.n == 1 && s.q == 2; });
}

}  // namespace

FactorList semisimple_quotient(const RingSpec& spec) {
  FactorList out;
  collect(spec, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_semisimple(const RingSpec& spec) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          std::uint64_t squarefree = 1;
          for (auto p : prime_divisors(node.modulus)) squarefree *= p;
          return squarefree == node.modulus;
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          return true;
        } else if constexpr (std::is_same_v<T, TriangularSpec>) {
          return node.size == 1;
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return is_semisimple(*node.base);
        } else {
          return std::all_of(node.factors.begin(), node.factors.end(),
                             [](const RingSpec& f) { return is_semisimple(f); });
        }
      },
      spec.node);
}

Verdict classify_well_covered(const RingSpec& spec) {
  Verdict v;
  v.question = Question::well_covered;
  v.factors = semisimple_quotient(spec);
  const FactorList& f = v.factors;
  auto yes = [&](const char* clause) {
    v.answer = Answer::yes;
    v.clause = clause;
    return v;
  };
  if (f.size() == 1 && f[0].n == 1) return yes("R/J(R) ≅ F");
  if (f.size() == 2 && f[0].n == 1 && f[1].n == 1 && f[0].q == f[1].q) return yes("R/J(R) ≅ F × F");
  if (f.size() == 1 && f[0].n == 2) return yes("R/J(R) ≅ M_2(F)");
  if (all_z2(f)) return yes("R/J(R) ≅ Z_2^k");

  v.answer = Answer::no;
  const bool has_matrix = std::any_of(f.begin(), f.end(), [](const SimpleFactor& s) { return s.n > 1; });
  if (f.size() == 1) {
    v.clause = "Γ(M_n(F)) is well-covered if and only if n ≤ 2";
    v.witness_hint = "maximal independent set containing the reduced-diagonal family D is smaller than |F|^(n^2-n)";
  } else if (has_matrix) {
    v.clause = "Γ(R × M_n(F)) is not well-covered for n > 1";
    v.witness_hint = "N = (R × {0}) ∪ (M × X) versus M × M_n(F)";
  } else {
    v.clause = "R/J(R) commutative but not F, F × F, or Z_2^k";
    v.witness_hint = "I × V(G2) versus V(G1) × I' in the conjunction product of unequal factors";
  }
  return v;
}

Verdict classify_cm(const RingSpec& spec) {
  Verdict v;
  v.question = Question::cohen_macaulay;
  v.factors = semisimple_quotient(spec);
  const FactorList& f = v.factors;
  if (!is_semisimple(spec)) {
    v.answer = Answer::no;
    v.clause = "J(R) ≠ 0: top pure skeleton not connected in codimension 1";
    v.witness_hint = "facets of the top pure skeleton are unions of J(R)-cosets";
    return v;
  }
  if (f.size() == 1 && f[0].n == 1) {
    v.answer = Answer::yes;
    v.clause = "R is a field";
  } else if (all_z2(f)) {
    v.answer = Answer::yes;
    v.clause = "R ≅ Z_2^k";
  } else {
    v.answer = Answer::no;
    v.clause = "R is neither a field nor Z_2^k";
    const bool has_matrix = std::any_of(f.begin(), f.end(), [](const SimpleFactor& s) { return s.n > 1; });
    if (f.size() == 1) {
      v.witness_hint = "top pure skeleton of ind(Γ(M_n(F))) is not connected in codimension 1";
    } else if (has_matrix) {
      v.witness_hint = "Γ(R) is not well-covered";
    } else {
      v.witness_hint = "ind(Γ(R)) is not shellable";
    }
  }
  return v;
}

Verdict classify_gorenstein(const RingSpec& spec) {
  Verdict v;
  v.question = Question::gorenstein;
  v.factors = semisimple_quotient(spec);
  if (is_semisimple(spec) && all_z2(v.factors)) {
    v.answer = Answer::yes;
    v.clause = "R ≅ Z_2^k";
  } else {
    v.answer = Answer::no;
    v.clause = "R is not isomorphic to Z_2^k";
    v.witness_hint = classify_cm(spec).answer == Answer::yes ? "complete graph K_q with q > 2 is not Gorenstein"
                                                             : "Γ(R) is not Cohen-Macaulay";
  }
  return v;
}

Verdict classify(const RingSpec& spec, Question q) {
  switch (q) {
    case Question::well_covered: return classify_well_covered(spec);
    case Question::cohen_macaulay: return classify_cm(spec);
    case Question::gorenstein: return classify_gorenstein(spec);
  }
  throw std::logic_error("classify: bad question");
}

}  // namespace ucayley
