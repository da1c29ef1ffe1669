#include <doctest.h>

#include <random>

#include "nrw/io.hpp"
#include "nrw/word.hpp"
#include "oracle/oracle.hpp"

using namespace nrw;

namespace {

Word w3(const char* text) { return io::parse_word(text, Alphabet::ternary()); }

RepetitionWitness wit(RepetitionKind k, std::size_t start, std::size_t period) {
  std::size_t total = 0;
  switch (k) {
    case RepetitionKind::Square: total = 2 * period; break;
    case RepetitionKind::Cube: total = 3 * period; break;
    case RepetitionKind::Overlap: total = 2 * period + 3; break;
    case RepetitionKind::WeakSquare: total = 2 * period + 2; break;
  }
  return {k, start, period, total};
}

}  // namespace

TEST_CASE("squares: leftmost then shortest") {
  CHECK(find_square(w3("123123")) == wit(RepetitionKind::Square, 1, 3));
  CHECK(!find_square(w3("12312")).has_value());
  CHECK(find_square(io::parse_word("1001")) == wit(RepetitionKind::Square, 2, 1));
  // same start: the shorter period wins
  CHECK(find_square(w3("112112")) == wit(RepetitionKind::Square, 1, 1));
}

TEST_CASE("cubes") {
  CHECK(find_cube(w3("123123123")) == wit(RepetitionKind::Cube, 1, 3));
  CHECK(find_cube(w3("111")) == wit(RepetitionKind::Cube, 1, 1));
  CHECK(!find_cube(io::parse_word("1001011001101001")).has_value());
}

TEST_CASE("overlaps, X may be empty") {
  CHECK(find_overlap(w3("212321232")) == wit(RepetitionKind::Overlap, 1, 3));
  CHECK(find_overlap(w3("111")) == wit(RepetitionKind::Overlap, 1, 0));
  CHECK(!find_overlap(io::parse_word("1001011001101001")).has_value());
}

TEST_CASE("weak squares, X may be empty") {
  CHECK(find_weak_square(w3("31231233")) == wit(RepetitionKind::WeakSquare, 1, 3));
  CHECK(find_weak_square(w3("11")) == wit(RepetitionKind::WeakSquare, 1, 0));
  CHECK(!find_weak_square(w3("123")).has_value());
  // 121 is squarefree's complement case: weakly squarefree but not squarefree-relevant
  CHECK(!find_weak_square(w3("121")).has_value());
}

TEST_CASE("words of length <= 1 satisfy every property") {
  for (const char* t : {"", "1"}) {
    const Word w = w3(t);
    for (RepetitionKind k : {RepetitionKind::Square, RepetitionKind::Cube, RepetitionKind::Overlap,
                             RepetitionKind::WeakSquare})
      CHECK(!contains_repetition(w.span(), k));
  }
}

TEST_CASE("every produced witness re-matches its pattern") {
  std::mt19937 rng(7);
  for (int t = 0; t < 3000; ++t) {
    const Alphabet a(2 + t % 3);
    std::uniform_int_distribution<std::size_t> len(0, 50);
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    LetterSeq s(len(rng));
    for (Letter& l : s) l = static_cast<Letter>(letter(rng));
    const Word w(s, a);
    for (RepetitionKind k : {RepetitionKind::Square, RepetitionKind::Cube, RepetitionKind::Overlap,
                             RepetitionKind::WeakSquare})
      if (auto found = find_repetition(w.span(), k)) CHECK(witness_matches(w.span(), *found));
  }
}

TEST_CASE("detectors agree with the naive oracle exhaustively up to length 10") {
  for (int k = 2; k <= 3; ++k) {
    LetterSeq buf;
    std::size_t checked = 0;
    auto rec = [&](auto&& self) -> void {
      for (RepetitionKind kind : {RepetitionKind::Square, RepetitionKind::Cube,
                                  RepetitionKind::Overlap, RepetitionKind::WeakSquare}) {
        const auto fast = find_repetition({buf.data(), buf.size()}, kind);
        const auto slow = oracle::find_naive({buf.data(), buf.size()}, kind);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) REQUIRE(*fast == *slow);
      }
      ++checked;
      if (buf.size() == 10) return;
      for (int c = 0; c < k; ++c) {
        buf.push_back(static_cast<Letter>(c));
        self(self);
        buf.pop_back();
      }
    };
    rec(rec);
    CHECK(checked > 0);
  }
}

TEST_CASE("containment: overlaps and cubes force squares") {
  std::mt19937 rng(11);
  for (int t = 0; t < 3000; ++t) {
    const Alphabet a(2 + t % 2);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    LetterSeq s(len(rng));
    for (Letter& l : s) l = static_cast<Letter>(letter(rng));
    const bool sq = contains_repetition({s.data(), s.size()}, RepetitionKind::Square);
    if (contains_repetition({s.data(), s.size()}, RepetitionKind::Overlap)) CHECK(sq);
    if (contains_repetition({s.data(), s.size()}, RepetitionKind::Cube)) CHECK(sq);
    const auto weak = find_repetition({s.data(), s.size()}, RepetitionKind::WeakSquare);
    if (weak && weak->period == 0) CHECK(sq);
  }
}

TEST_CASE("letter rotation") {
  CHECK(io::render_word(shifted(w3("123"), +1)) == "231");
  CHECK(shifted(w3(""), +1).empty());
  CHECK(io::render_word(shifted(w3("333"), -1)) == "222");
  CHECK_THROWS_AS(shifted(io::parse_word("1001"), +1), std::invalid_argument);
  std::mt19937 rng(3);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<int> letter(0, 2);
    LetterSeq s(len(rng));
    for (Letter& l : s) l = static_cast<Letter>(letter(rng));
    const Word w(s, Alphabet::ternary());
    CHECK(shifted(shifted(w, +1), -1) == w);
  }
}

TEST_CASE("increasing and decreasing words") {
  CHECK(is_increasing(w3("1231")));
  CHECK(is_decreasing(w3("1321")));
  CHECK(is_increasing(w3("1")));
  CHECK(is_decreasing(w3("1")));
  CHECK(!is_increasing(w3("1321")));
  // both at once only below length 2
  for (const Word& w : enumerate_words(Alphabet::ternary(), 4, kAvoidNone))
    CHECK(!(is_increasing(w) && is_decreasing(w)));
}

TEST_CASE("enumeration: the twelve squarefree ternary words of length 3") {
  const auto words = enumerate_words(Alphabet::ternary(), 3, kSquarefree);
  std::vector<std::string> got;
  for (const Word& w : words) got.push_back(io::render_word(w));
  CHECK(got == std::vector<std::string>{"121", "123", "131", "132", "212", "213", "231", "232",
                                        "312", "313", "321", "323"});
}

TEST_CASE("enumeration: squarefree counts over the ternary alphabet") {
  // derived by two independent routes (pruned DFS vs generate-then-filter)
  const std::size_t expected[] = {3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264, 342};
  for (std::size_t n = 1; n <= 13; ++n)
    CHECK(enumerate_words(Alphabet::ternary(), n, kSquarefree).size() == expected[n - 1]);
  CHECK(enumerate_words(Alphabet(2), 4, kSquarefree).empty());
}

TEST_CASE("pruned enumeration equals generate-then-filter up to length 8") {
  for (int k = 2; k <= 3; ++k)
    for (KindMask mask : {kSquarefree, kCubefree, kOverlapFree, kWeaklySquarefree})
      for (std::size_t n = 0; n <= 8; ++n)
        REQUIRE(enumerate_words(Alphabet(k), n, mask) ==
                oracle::enumerate_filtered(Alphabet(k), n, mask));
}

TEST_CASE("length-ordered enumeration is ascending and clean") {
  const auto words = enumerate_words_up_to(Alphabet::ternary(), 5, kOverlapFree);
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(words[i - 1].size() <= words[i].size());
    if (words[i - 1].size() == words[i].size())
      CHECK(words[i - 1].letters() < words[i].letters());
  }
  for (const Word& w : words) {
    CHECK(!w.empty());
    CHECK(!contains_repetition(w.span(), RepetitionKind::Overlap));
  }
}

TEST_CASE("alphabet bounds") {
  CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(10), std::invalid_argument);
  CHECK_THROWS_AS(Word(LetterSeq{3}, Alphabet::ternary()), std::invalid_argument);
}
