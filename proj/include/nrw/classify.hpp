#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrw/morphism.hpp"
#include "nrw/word.hpp"

namespace nrw {

enum class PropertyKind : std::uint8_t {
  Squarefree,
  Cubefree,
  OverlapFree,
  WeaklySquarefree,
  HasFixedPoint,
  Cyclic,
};

// The repetition kind whose absence the first four properties assert.
RepetitionKind repetition_kind_of(PropertyKind p);

enum class Verdict : std::uint8_t {
  ProvenTrue,    // a finite criterion decides the property (named below)
  ProvenFalse,   // a finite check decides its negation (seeds, rotation)
  RefutedBy,     // a clean preimage whose image violates the property
  VerifiedUpTo,  // bounded search found no refutation; explicitly not a proof
};

struct Refutation {
  Word preimage;
  RepetitionWitness witness;  // located in the image of the preimage
};

struct PropertyDecision {
  PropertyKind property;
  Verdict verdict;
  std::string criterion;               // ProvenTrue / ProvenFalse
  std::optional<Refutation> refutation;
  std::size_t test_word_length = 0;    // VerifiedUpTo bounds
  std::size_t prefix_length = 0;

  bool refuted() const { return verdict == Verdict::RefutedBy; }
};

struct ClassifyConfig {
  std::size_t test_len = 8;       // max preimage length swept
  std::size_t prefix_len = 10000; // min fixed-point prefix scanned per seed
};

// Exact squarefreeness decision for ternary morphisms via the Crochemore
// test sets (squarefree words of length <= 3 uniform, <= 5 general).
// Non-ternary alphabets degrade to the bounded check.
PropertyDecision decide_squarefree(const Morphism& m, const ClassifyConfig& cfg = {});

// Sound refutation search plus bounded corroboration for the word
// properties. Sweeps every property-clean preimage of length <= K
// (ascending length, then lexicographic, so a returned refutation preimage
// is minimal in that order), then scans a fixed-point prefix of length
// >= L for every seed. VerifiedUpTo reports the actual scanned prefix
// length, which may exceed L.
PropertyDecision check_bounded(const Morphism& m, PropertyKind property, std::size_t test_len,
                               std::size_t prefix_len);

// Refutation search over a caller-supplied preimage list (must be clean for
// the property and ordered as desired). Used by the sweeps to share
// enumerations across many candidate morphisms.
std::optional<Refutation> refute_over(const Morphism& m, RepetitionKind kind,
                                      std::span<const Word> preimages);

struct ThueCondition {
  std::string name;
  bool pass;
};

// Structural necessary conditions for a weakly squarefree Thue morphism:
// edge letters of the images pairwise distinct (both ends), first two and
// last two letters of each image differ, and each image starts and ends
// with the same letter. Any failure rules the morphism out.
std::vector<ThueCondition> thue_necessary_conditions(const Morphism& m);

struct ThueStatus {
  bool value = false;
  bool bounded = false;  // true when it rests on VerifiedUpTo decisions
  std::size_t test_word_length = 0;
  std::size_t prefix_length = 0;
};

struct MorphismReport {
  Morphism morphism;
  std::vector<PropertyDecision> decisions;  // one per PropertyKind, in enum order
  ThueStatus thue;

  const PropertyDecision& decision(PropertyKind p) const;
};

MorphismReport classify(const Morphism& m, const ClassifyConfig& cfg = {});

// Re-validates a decision against the morphism: a refutation's preimage must
// be property-clean and its witness must match inside the image.
bool validate_decision(const Morphism& m, const PropertyDecision& d);

}  // namespace nrw
