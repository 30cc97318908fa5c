#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucayley/ring_spec.hpp"

namespace ucayley {

/// One simple factor M_n(F_q) of a semisimple quotient.
struct SimpleFactor {
  unsigned n = 1;
  std::uint64_t q = 2;
  friend auto operator<=>(const SimpleFactor&, const SimpleFactor&) = default;
};

/// R/J(R) as a multiset of simple factors, kept sorted by (n, q).
using FactorList = std::vector<SimpleFactor>;

enum class Answer { yes, no, inconclusive };
std::string to_string(Answer a);

enum class Question { well_covered, cohen_macaulay, gorenstein };
std::string to_string(Question q);
/// "wellcovered" | "cm" | "gorenstein"
Question parse_question(std::string_view text);

struct Verdict {
  Question question = Question::well_covered;
  Answer answer = Answer::no;
  /// The single clause of the classifying theorem that decided the answer.
  std::string clause;
  /// For "no": which construction refutes it.
  std::string witness_hint;
  FactorList factors;
};

FactorList semisimple_quotient(const RingSpec& spec);
/// True iff J(R) = 0, decided from the spec.
bool is_semisimple(const RingSpec& spec);

Verdict classify_well_covered(const RingSpec& spec);
Verdict classify_cm(const RingSpec& spec);
Verdict classify_gorenstein(const RingSpec& spec);
Verdict classify(const RingSpec& spec, Question q);

}  // namespace ucayley
