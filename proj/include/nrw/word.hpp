#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nrw {

using Letter = std::uint8_t;            // 0-based letter index
using LetterSeq = std::vector<Letter>;

// Presentation style for letters. Internal letters are always 0..k-1;
// the style only decides which character renders letter i.
enum class Style : std::uint8_t {
  Digits1,  // '1'..'9'  (letter 0 is '1')
  Digits0,  // '0'..'9'  (letter 0 is '0'; used for the binary 0/1 alphabet)
  Letters,  // 'a'..'z'  (letter 0 is 'a'; aliases Digits1: a=1, b=2, c=3)
};

class Alphabet {
 public:
  explicit Alphabet(int size, Style style = Style::Digits1);

  static Alphabet ternary() { return Alphabet(3); }
  static Alphabet binary01() { return Alphabet(2, Style::Digits0); }

  int size() const { return size_; }
  Style style() const { return style_; }

  char symbol(Letter l) const;

  // Style is presentation metadata; two alphabets are the same alphabet
  // when they have the same number of letters.
  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.size_ == b.size_;
  }

 private:
  std::uint8_t size_;
  Style style_;
};

class Word {
 public:
  Word() : alphabet_(Alphabet::ternary()) {}
  Word(LetterSeq letters, Alphabet alphabet);

  const LetterSeq& letters() const { return letters_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> span() const { return {letters_.data(), letters_.size()}; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  // Lexicographic on letters; used for canonical orderings.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  LetterSeq letters_;
  Alphabet alphabet_;
};

Word concat(const Word& a, const Word& b);

enum class RepetitionKind : std::uint8_t { Square, Cube, Overlap, WeakSquare };

// Factor patterns, with X the repeated block of length `period`:
//   Square     XX      (period >= 1, total 2p)
//   Cube       XXX     (period >= 1, total 3p)
//   Overlap    aXaXa   (period >= 0, total 2p+3)
//   WeakSquare aXXa    (period >= 0, total 2p+2)
struct RepetitionWitness {
  RepetitionKind kind;
  std::size_t start;  // 1-based position of the factor
  std::size_t period;
  std::size_t total_length;

  friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

// All detectors return the leftmost witness, breaking ties by the shortest
// period. They run one linear pass per candidate period.
std::optional<RepetitionWitness> find_repetition(std::span<const Letter> w, RepetitionKind kind);
bool contains_repetition(std::span<const Letter> w, RepetitionKind kind);

std::optional<RepetitionWitness> find_square(const Word& w);
std::optional<RepetitionWitness> find_cube(const Word& w);
std::optional<RepetitionWitness> find_overlap(const Word& w);
std::optional<RepetitionWitness> find_weak_square(const Word& w);

// Bitmask of RepetitionKind values a word must avoid.
using KindMask = std::uint8_t;
constexpr KindMask kind_bit(RepetitionKind k) {
  return static_cast<KindMask>(1u << static_cast<unsigned>(k));
}
constexpr KindMask kAvoidNone = 0;
constexpr KindMask kSquarefree = kind_bit(RepetitionKind::Square);
constexpr KindMask kCubefree = kind_bit(RepetitionKind::Cube);
constexpr KindMask kOverlapFree = kind_bit(RepetitionKind::Overlap);
constexpr KindMask kWeaklySquarefree = kind_bit(RepetitionKind::WeakSquare);

bool is_clean(std::span<const Letter> w, KindMask avoid);
inline bool is_squarefree(std::span<const Letter> w) { return !contains_repetition(w, RepetitionKind::Square); }

// True when no repetition of a kind in `avoid` ends at the last letter of w.
// For a word whose proper prefix is already clean this decides cleanness of
// the whole word, because all four kinds are closed under taking factors.
bool extension_clean(std::span<const Letter> w, KindMask avoid);

// Re-checks that `wit` really matches its pattern at the stated position.
bool witness_matches(std::span<const Letter> w, const RepetitionWitness& wit);

// Ternary letter rotation 1->2->3->1 (delta +1) and its inverse (delta -1).
Letter shift_letter(Letter l, int delta);
Word shifted(const Word& w, int delta);  // rejects non-ternary alphabets

// Increasing: every step is +1; decreasing: every step is -1. Words of
// length <= 1 are both. Ternary only.
bool is_increasing(const Word& w);
bool is_decreasing(const Word& w);

// All words of the given length avoiding `avoid`, in lexicographic order.
// DFS with prefix pruning; factor-closure makes the pruning exact.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length, KindMask avoid);

// Same but every non-empty clean word of length <= max_length, ordered by
// length then lexicographically. This is the preimage enumeration order the
// classifier uses, so refutation witnesses are minimal under that order.
std::vector<Word> enumerate_words_up_to(const Alphabet& alphabet, std::size_t max_length, KindMask avoid);

}  // namespace nrw
