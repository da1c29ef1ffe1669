#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nrw/morphism.hpp"
#include "nrw/word.hpp"

namespace nrw {

struct AvoidanceQuery {
  Alphabet alphabet = Alphabet::ternary();
  std::vector<Word> forbidden;       // non-empty factor words
  KindMask property = kSquarefree;   // conjunction of kinds to stay free of
  std::size_t budget = 64;           // DFS depth cap
};

struct AvoidanceOutcome {
  enum class Status { Exhausted, Open };
  Status status = Status::Exhausted;
  // Exhausted: the exact maximum length and every word attaining it.
  // Open: the budget, and the lexicographically least word reaching it.
  std::size_t max_len = 0;
  std::vector<Word> witnesses;
  std::uint64_t nodes_visited = 0;
};

// DFS over the tree of property-clean words avoiding all forbidden factors;
// children are letter extensions in ascending order. The tree is explored
// exactly (prefix pruning is sound by factor closure), so a finite tree
// yields the exact maximum. An optional DOT sink receives the explored tree.
AvoidanceOutcome max_avoiding(const AvoidanceQuery& query, std::ostream* dot = nullptr);

struct AvoidanceViolation {
  enum class Type { Repetition, ForbiddenFactor };
  Type type;
  std::size_t position;  // 1-based start of the violation
  std::optional<RepetitionWitness> witness;
  std::optional<Word> factor;
};

struct VerifyResult {
  bool ok = false;
  std::optional<AvoidanceViolation> violation;  // earliest violation
};

VerifyResult verify_avoidance(const Word& word, const AvoidanceQuery& query);

// Generates a fixed-point prefix of length >= min_len and verifies it
// against the query. A clean result is evidence up to that length only.
struct PrefixCheckReport {
  Morphism morphism;
  Letter seed;
  std::size_t prefix_length = 0;
  VerifyResult result;
};

PrefixCheckReport check_fixed_point_avoidance(const Morphism& m, Letter seed,
                                              const AvoidanceQuery& query, std::size_t min_len);

}  // namespace nrw
