#include <doctest.h>

#include <random>

#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "nrw/morphism.hpp"

using namespace nrw;

TEST_CASE("application concatenates letter images") {
  const Morphism m = io::parse_morphism("1 -> 1231\n2 -> 3112\n3 -> 1132\n");
  CHECK(io::render_word(m.apply(io::parse_word("1231", m.alphabet()))) == "1231311211321231");
  CHECK(m.apply(Word({}, m.alphabet())).empty());

  const Morphism tm = fixtures::morphism("thue-morse");
  CHECK(io::render_word(tm.apply(io::parse_word("10", tm.alphabet()))) == "1001");
}

TEST_CASE("uniform rank") {
  CHECK(fixtures::morphism("leech").uniform_rank() == 13);
  CHECK(!fixtures::morphism("thue-1912").uniform_rank().has_value());
  CHECK(io::parse_morphism("1 -> 1\n2 -> 2\n3 -> 3\n").uniform_rank() == 1);
}

TEST_CASE("cyclic morphisms commute with the rotation") {
  CHECK(is_cyclic(fixtures::morphism("rank5")));
  CHECK(is_cyclic(fixtures::morphism("leech")));
  CHECK(!is_cyclic(fixtures::morphism("phi1-rank11")));
  CHECK_THROWS_AS(is_cyclic(fixtures::morphism("thue-morse")), std::invalid_argument);

  std::mt19937 rng(23);
  for (int t = 0; t < 500; ++t) {
    std::uniform_int_distribution<std::size_t> len(1, 8);
    std::uniform_int_distribution<int> letter(0, 2);
    LetterSeq s(len(rng));
    for (Letter& l : s) l = static_cast<Letter>(letter(rng));
    const Word base(s, Alphabet::ternary());
    const Morphism m(Alphabet::ternary(),
                     {base, shifted(base, +1), shifted(shifted(base, +1), +1)});
    REQUIRE(is_cyclic(m));
    LetterSeq ws(len(rng) * 2);
    for (Letter& l : ws) l = static_cast<Letter>(letter(rng));
    const Word w(ws, Alphabet::ternary());
    REQUIRE(m.apply(shifted(w, +1)) == shifted(m.apply(w), +1));
  }
}

TEST_CASE("fixed point seeds require a self-prefixing growing image") {
  const auto rank5 = fixed_point_seeds(fixtures::morphism("rank5"));
  CHECK(rank5 == std::vector<Letter>{0, 1, 2});
  CHECK(fixed_point_seeds(fixtures::morphism("rank4")) == std::vector<Letter>{0, 1, 2});
  CHECK(fixed_point_seeds(io::parse_morphism("1 -> 21\n2 -> 12\n")).empty());
  // growth is required: the identity has no infinite fixed point
  CHECK(fixed_point_seeds(io::parse_morphism("1 -> 1\n2 -> 2\n3 -> 3\n")).empty());
}

TEST_CASE("fixed point prefixes extend one another") {
  const Morphism tm = fixtures::morphism("thue-morse");
  const Word p16 = fixed_point_prefix(tm, 1, 16);
  CHECK(io::render_word(p16).substr(0, 16) == "1001011001101001");

  FixedPointStream stream(tm, 1);
  const auto a = stream.extend_to(100);
  const std::vector<Letter> head(a.begin(), a.end());
  const auto b = stream.extend_to(1000);
  CHECK(std::equal(head.begin(), head.end(), b.begin()));

  const Morphism r3 = fixtures::morphism("rank3");
  CHECK(io::render_word(fixed_point_prefix(r3, 0, 3)).substr(0, 3) == "121");
  CHECK_THROWS_AS(FixedPointStream(io::parse_morphism("1 -> 21\n2 -> 12\n"), 0),
                  std::invalid_argument);
}

TEST_CASE("canonical fragments cover the image") {
  const Morphism r5 = fixtures::morphism("rank5");
  const auto d = canonical_fragments(r5, io::parse_word("212", r5.alphabet()));
  REQUIRE(d.fragment_count() == 3);
  CHECK(io::render_word(d.fragment(0)) == "23132");
  CHECK(io::render_word(d.fragment(1)) == "12321");
  CHECK(io::render_word(d.fragment(2)) == "23132");
  CHECK(d.image == r5.apply(d.source));

  CHECK(canonical_fragments(r5, Word({}, r5.alphabet())).fragment_count() == 0);

  const Morphism tm = fixtures::morphism("thue-morse");
  const auto dt = canonical_fragments(tm, io::parse_word("10", tm.alphabet()));
  CHECK(io::render_word(dt.fragment(0)) == "10");
  CHECK(io::render_word(dt.fragment(1)) == "01");

  // fragment i is the image of source[i]; concatenation rebuilds the image
  const Morphism t12 = fixtures::morphism("thue-1912");
  const Word src = io::parse_word("3121", t12.alphabet());
  const auto dn = canonical_fragments(t12, src);
  Word rebuilt({}, t12.alphabet());
  for (std::size_t i = 0; i < dn.fragment_count(); ++i) {
    CHECK(dn.fragment(i) == t12.image(src[i]));
    rebuilt = concat(rebuilt, dn.fragment(i));
  }
  CHECK(rebuilt == dn.image);
}

TEST_CASE("homomorphism law on random inputs") {
  std::mt19937 rng(5);
  const Alphabet a = Alphabet::ternary();
  std::uniform_int_distribution<std::size_t> len(0, 10);
  std::uniform_int_distribution<int> letter(0, 2);
  auto random_word = [&](std::size_t max) {
    LetterSeq s(len(rng) % (max + 1));
    for (Letter& l : s) l = static_cast<Letter>(letter(rng));
    return Word(s, a);
  };
  for (int t = 0; t < 2000; ++t) {
    std::vector<Word> images;
    for (int i = 0; i < 3; ++i) {
      Word img = random_word(5);
      images.push_back(img.empty() ? Word(LetterSeq{0}, a) : img);
    }
    const Morphism m(a, images);
    const Word u = random_word(10), v = random_word(10);
    REQUIRE(m.apply(concat(u, v)) == concat(m.apply(u), m.apply(v)));
  }
}

TEST_CASE("construction rejects bad morphisms") {
  CHECK_THROWS_AS(Morphism(Alphabet::ternary(), {}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(Alphabet::ternary(),
                           {Word({}, Alphabet::ternary()), Word(LetterSeq{1}, Alphabet::ternary()),
                            Word(LetterSeq{2}, Alphabet::ternary())}),
                  std::invalid_argument);
  const Morphism tm = fixtures::morphism("thue-morse");
  CHECK_THROWS_AS(tm.apply(io::parse_word("123", Alphabet::ternary())), std::invalid_argument);
}
