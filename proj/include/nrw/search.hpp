#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nrw/classify.hpp"
#include "nrw/morphism.hpp"

namespace nrw {

// One element of the symmetry group acting on ternary morphisms:
// letter renaming after the morphism, letter permutation before it, and
// optional image reversal. 6 * 6 * 2 = 72 transforms; each preserves
// uniformity and squarefreeness.
struct MorphismTransform {
  std::array<Letter, 3> rename;  // output letters
  std::array<Letter, 3> select;  // input letters
  bool mirror = false;
};

MorphismTransform identity_transform();
std::vector<MorphismTransform> symmetry_transforms();
Morphism transformed(const Morphism& m, const MorphismTransform& t);

// Canonical row form "phi(1)|phi(2)|phi(3)" with digit rendering.
std::string serialize_morphism(const Morphism& m);
// Lexicographically least serialization over the given transforms.
std::string canonical_form(const Morphism& m, std::span<const MorphismTransform> group);

struct OrbitClass {
  Morphism representative;  // least-serialization member of the input
  std::size_t size = 0;     // input members in the orbit
  std::size_t outside = 0;  // orbit elements not present in the input
};

// Partitions the input into orbits under the group action, sorted by
// representative serialization.
std::vector<OrbitClass> orbit_reduce(const std::vector<Morphism>& morphisms,
                                     std::span<const MorphismTransform> group);

struct SearchConfig {
  int threads = 0;          // 0 = hardware concurrency (clamped)
  bool prune = true;        // pair-image prefilter in the census
  std::size_t test_len = 8;
  std::size_t prefix_len = 10000;
};

struct SweepRefutation {
  Morphism candidate;
  PropertyDecision decision;
};

struct SearchReport {
  std::string kind;
  int rank = 0;
  Alphabet alphabet = Alphabet::ternary();
  std::uint64_t pool_size = 0;  // words for censuses, seeded morphisms for sweeps
  std::vector<Morphism> survivors;  // sorted by serialization
  std::vector<OrbitClass> orbit_classes;
  std::uint64_t refuted_count = 0;
  std::uint64_t refutations_validated = 0;
  std::size_t max_refutation_preimage = 0;
  std::vector<SweepRefutation> refutation_samples;
  std::chrono::milliseconds wall_time{0};
};

// All uniform ternary squarefree morphisms of the given rank, decided by the
// Crochemore uniform test. The default mode prefilters ordered image pairs
// (every 2-letter squarefree preimage must already map to a squarefree word,
// a necessary condition by factor closure); prune=false runs the plain
// triple loop for audits.
SearchReport search_uniform_squarefree(int rank, const SearchConfig& cfg = {});

// Cyclic candidates: phi(1) ranges over squarefree words, phi(2) and phi(3)
// are its rotations; survivors pass the squarefreeness decision.
SearchReport search_cyclic_squarefree(int rank, const SearchConfig& cfg = {});

// Sweep of all uniform rank-r morphisms possessing a fixed-point seed, over
// the given alphabet (binary or ternary). Candidates are refuted by
// structural edge conditions (turned into concrete witnesses), bounded
// preimage sweeps, or fixed-point prefix scans; survivors carry bounded
// verification only, never a proof.
SearchReport search_weakly_squarefree_thue(int rank, const Alphabet& alphabet,
                                           const SearchConfig& cfg = {});

// Squarefree survivors additionally screened for cubefreeness and
// overlap-freeness refutations.
SearchReport search_triple_property(int rank, const SearchConfig& cfg = {});

}  // namespace nrw
