#pragma once

#include <optional>
#include <vector>

#include "nrw/word.hpp"

namespace nrw {

// Non-erasing morphism given by its letter images, all over one alphabet.
class Morphism {
 public:
  Morphism(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(Letter l) const { return images_.at(l); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  // Image length when all images share it; absent otherwise.
  std::optional<std::size_t> uniform_rank() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

inline Word apply(const Morphism& m, const Word& w) { return m.apply(w); }

// Ternary check: image(2) = image(1)+1 and image(3) = image(2)+1 under the
// rotation 1->2->3->1, i.e. the morphism commutes with the rotation.
bool is_cyclic(const Morphism& m);

// Letters u with image(u) = uV, |image(u)| >= 2, so iterating from u yields
// an infinite fixed point.
std::vector<Letter> fixed_point_seeds(const Morphism& m);

// Splits apply(m, source) into the |source| letter images.
// boundaries[i] is the end position (exclusive, 0-based) of fragment i.
struct FragmentDecomposition {
  Word source;
  Word image;
  std::vector<std::size_t> boundaries;

  std::size_t fragment_count() const { return boundaries.size(); }
  Word fragment(std::size_t i) const;
};

FragmentDecomposition canonical_fragments(const Morphism& m, const Word& w);

// Grows a prefix of the fixed point from a seed letter by repeated
// application. Each application must extend the previous prefix; that
// prefix stability is asserted at every step. Single-owner mutable state;
// clone for parallel use.
class FixedPointStream {
 public:
  FixedPointStream(Morphism m, Letter seed);

  // Applies the morphism until the buffer holds at least min_len letters,
  // then returns the whole computed prefix (never truncated).
  std::span<const Letter> extend_to(std::size_t min_len);

  std::span<const Letter> prefix() const { return {buf_.data(), buf_.size()}; }
  std::size_t size() const { return buf_.size(); }
  Word prefix_word() const { return Word(buf_, morphism_.alphabet()); }
  const Morphism& morphism() const { return morphism_; }
  Letter seed() const { return seed_; }

 private:
  Morphism morphism_;
  Letter seed_;
  LetterSeq buf_;
};

// Full prefix of length >= min_len of the fixed point from `seed`.
Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t min_len);

}  // namespace nrw
