#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "nrw/search.hpp"

using namespace nrw;

TEST_CASE("style inference and word round trips") {
  CHECK(io::infer_style("123") == Style::Digits1);
  CHECK(io::infer_style("1001") == Style::Digits0);
  CHECK(io::infer_style("abc") == Style::Letters);

  const Word tm = io::parse_word("1001011001101001");
  CHECK(tm.alphabet().size() == 2);
  CHECK(io::render_word(tm) == "1001011001101001");

  // a<->1 aliasing: the same letters under both renderings
  CHECK(io::parse_word("abc").letters() == io::parse_word("123").letters());
  CHECK(io::render_word(io::parse_word("bcba"), Style::Digits1) == "2321");
}

TEST_CASE("morphism text parses and renders") {
  const Morphism tm = io::parse_morphism("1 -> 10\n0 -> 01");
  CHECK(tm.alphabet().size() == 2);
  CHECK(io::render_word(tm.image(0)) == "01");
  CHECK(io::render_word(tm.image(1)) == "10");
  CHECK(io::render_morphism(tm) == "0 -> 01\n1 -> 10\n");

  const Morphism r3 = io::parse_morphism("1 -> 121\n2 -> 232\n3 -> 313\n");
  CHECK(r3.uniform_rank() == 3);

  CHECK_THROWS_AS(io::parse_morphism("1 -> \n2 -> 2\n3 -> 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_morphism("1 -> 1\n1 -> 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_morphism("1 -> 13\n3 -> 31\n"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_morphism("1 -> 12\n2 -> 24\n"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_morphism(""), std::invalid_argument);
}

TEST_CASE("parse-render round trip on fixtures and random morphisms") {
  for (const auto& info : fixtures::list()) {
    if (info.kind != fixtures::Kind::MorphismText) continue;
    const Morphism m = fixtures::morphism(std::string(info.name));
    CHECK(io::parse_morphism(io::render_morphism(m)) == m);
  }
  std::mt19937 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const Alphabet a(2 + t % 3);
    std::uniform_int_distribution<std::size_t> len(1, 9);
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    std::vector<Word> images;
    for (int i = 0; i < a.size(); ++i) {
      LetterSeq s(len(rng));
      for (Letter& l : s) l = static_cast<Letter>(letter(rng));
      images.emplace_back(std::move(s), a);
    }
    const Morphism m(a, std::move(images));
    REQUIRE(io::parse_morphism(io::render_morphism(m)) == m);
  }
}

TEST_CASE("census table emission") {
  SearchReport empty;
  CHECK(io::emit_census_table(empty) == "phi(1) phi(2) phi(3)\n");

  SearchReport one;
  one.survivors.push_back(fixtures::morphism("phi1-rank11"));
  CHECK(io::emit_census_table(one) ==
        "phi(1) phi(2) phi(3)\n12131232123 13212321323 13213121323\n");
}

TEST_CASE("witnesses round-trip through the JSON form") {
  const RepetitionWitness w{RepetitionKind::Overlap, 4, 3, 9};
  const auto j = io::witness_json(w);
  CHECK(j["kind"] == "overlap");
  const RepetitionWitness back{RepetitionKind::Overlap, j["start"].get<std::size_t>(),
                               j["period"].get<std::size_t>(),
                               j["total_length"].get<std::size_t>()};
  CHECK(back == w);
}

TEST_CASE("report JSON carries the schema version and verdict shapes") {
  const MorphismReport rep = classify(fixtures::morphism("rank4"), ClassifyConfig{4, 500});
  const auto j = io::report_json(rep);
  CHECK(j["schema_version"] == io::kSchemaVersion);
  bool saw_refuted = false, saw_bounded = false;
  for (const auto& d : j["decisions"]) {
    if (d["verdict"] == "refuted-by") {
      saw_refuted = true;
      CHECK(d.contains("preimage"));
      CHECK(d.contains("witness"));
    }
    if (d["verdict"] == "verified-up-to") {
      saw_bounded = true;
      CHECK(d.contains("test_word_length"));
    }
  }
  CHECK(saw_refuted);
  CHECK(saw_bounded);
  CHECK(j["thue_morphism"]["value"] == true);
}

TEST_CASE("fixtures are checksum-pinned") {
  for (const auto& info : fixtures::list()) CHECK(!fixtures::text(std::string(info.name)).empty());
  CHECK(fixtures::word("word718").size() == 718);
  CHECK(fixtures::morphism("leech").uniform_rank() == 13);

  const std::string census = fixtures::census_table("census-rank11");
  CHECK(std::count(census.begin(), census.end(), '\n') == 145);  // header + 144 rows

  CHECK_THROWS_AS(fixtures::word("nonexistent"), std::invalid_argument);
  CHECK_THROWS_AS(fixtures::word("leech"), std::invalid_argument);  // wrong kind
}

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(io::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(io::fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("embedded fixtures equal the checked-in canonical files") {
  auto slurp = [](const std::string& rel) {
    std::ifstream f(std::string(NRW_SOURCE_DIR) + "/" + rel, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  CHECK(slurp("data/census-rank11.txt") == fixtures::census_table("census-rank11"));
  CHECK(slurp("data/word718.txt") == fixtures::text("word718"));
}
