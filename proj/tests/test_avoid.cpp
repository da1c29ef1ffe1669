#include <doctest.h>

#include <array>
#include <sstream>

#include "nrw/avoid.hpp"
#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "oracle/oracle.hpp"

using namespace nrw;

namespace {

AvoidanceQuery ternary_query(std::vector<std::string> forbid, std::size_t budget = 64) {
  AvoidanceQuery q{Alphabet::ternary(), {}, kSquarefree, budget};
  for (const std::string& f : forbid) q.forbidden.push_back(io::parse_word(f, q.alphabet));
  return q;
}

}  // namespace

TEST_CASE("longest squarefree word without the factor ab") {
  const AvoidanceOutcome out = max_avoiding(ternary_query({"12"}));
  CHECK(out.status == AvoidanceOutcome::Status::Exhausted);
  CHECK(out.max_len == 13);
  REQUIRE(out.witnesses.size() == 1);
  CHECK(io::render_word(out.witnesses[0], Style::Letters) == "bcbacbcacbaca");
  // witnesses re-verify and cannot be extended
  const VerifyResult v = verify_avoidance(out.witnesses[0], ternary_query({"12"}));
  CHECK(v.ok);
}

TEST_CASE("relabeling the forbidden pair does not change the maximum") {
  const std::array<const char*, 6> pairs = {"12", "13", "21", "23", "31", "32"};
  for (const char* f : pairs) {
    const AvoidanceOutcome out = max_avoiding(ternary_query({f}));
    CHECK(out.max_len == 13);
    CHECK(out.witnesses.size() == 1);
  }
}

TEST_CASE("longest squarefree word without the factor abc") {
  const AvoidanceOutcome out = max_avoiding(ternary_query({"123"}));
  CHECK(out.status == AvoidanceOutcome::Status::Exhausted);
  CHECK(out.max_len == 29);  // derived; below the case-analysis bound of 36
  REQUIRE(out.witnesses.size() == 1);
  CHECK(io::render_word(out.witnesses[0]) == "23132312132313213121323121312");
}

TEST_CASE("binary cubefree and weakly squarefree words stop at length 5") {
  AvoidanceQuery q{Alphabet::binary01(), {}, static_cast<KindMask>(kCubefree | kWeaklySquarefree),
                   64};
  const AvoidanceOutcome out = max_avoiding(q);
  CHECK(out.max_len == 5);
  REQUIRE(out.witnesses.size() == 2);
  CHECK(io::render_word(out.witnesses[0]) == "01010");
  CHECK(io::render_word(out.witnesses[1]) == "10101");
}

TEST_CASE("adding forbidden factors never raises the maximum") {
  const std::size_t base = max_avoiding(ternary_query({"12"})).max_len;
  const std::size_t more = max_avoiding(ternary_query({"12", "21"})).max_len;
  CHECK(more <= base);
}

TEST_CASE("an infinite tree hits the budget") {
  AvoidanceQuery q{Alphabet(4), {io::parse_word("12", Alphabet(4))}, kSquarefree, 30};
  const AvoidanceOutcome out = max_avoiding(q);
  CHECK(out.status == AvoidanceOutcome::Status::Open);
  CHECK(out.max_len == 30);
  REQUIRE(out.witnesses.size() == 1);
  CHECK(out.witnesses[0].size() == 30);
  const VerifyResult v = verify_avoidance(out.witnesses[0], q);
  CHECK(v.ok);
}

TEST_CASE("node count matches the filtered enumeration") {
  const AvoidanceQuery q = ternary_query({"12"}, 20);
  const AvoidanceOutcome out = max_avoiding(q);
  std::uint64_t expected = 0;
  for (std::size_t n = 0; n <= out.max_len; ++n)
    for (const Word& w : oracle::enumerate_filtered(q.alphabet, n, q.property)) {
      bool avoids = true;
      for (const Word& f : q.forbidden)
        if (std::search(w.letters().begin(), w.letters().end(), f.letters().begin(),
                        f.letters().end()) != w.letters().end())
          avoids = false;
      if (avoids) ++expected;
    }
  CHECK(out.nodes_visited == expected);
}

TEST_CASE("verification pinpoints the earliest violation") {
  const Word w718 = fixtures::word("word718");
  AvoidanceQuery only_aba{w718.alphabet(), {io::parse_word("aba", w718.alphabet())}, kSquarefree, 1};
  CHECK(verify_avoidance(w718, only_aba).ok);

  AvoidanceQuery both = only_aba;
  both.forbidden.push_back(io::parse_word("bab", w718.alphabet()));
  const VerifyResult v = verify_avoidance(w718, both);
  REQUIRE(!v.ok);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->type == AvoidanceViolation::Type::ForbiddenFactor);
  CHECK(v.violation->position == 24);
  CHECK(io::render_word(*v.violation->factor) == "bab");

  const Word aba = io::parse_word("aba");
  AvoidanceQuery q{aba.alphabet(), {aba}, kSquarefree, 1};
  const VerifyResult self = verify_avoidance(aba, q);
  REQUIRE(!self.ok);
  CHECK(self.violation->position == 1);

  CHECK(verify_avoidance(Word({}, Alphabet::ternary()), ternary_query({"12"})).ok);
}

TEST_CASE("fixed-point prefixes verify against queries") {
  const Morphism m = fixtures::morphism("thue-1912");
  AvoidanceQuery q{m.alphabet(), {io::parse_word("123123", m.alphabet())}, kSquarefree, 1};
  const PrefixCheckReport rep = check_fixed_point_avoidance(m, 0, q, 2000);
  CHECK(rep.prefix_length >= 2000);
  CHECK(rep.result.ok);

  // a single forbidden letter is found immediately
  AvoidanceQuery q1{m.alphabet(), {io::parse_word("1", m.alphabet())}, kAvoidNone, 1};
  const PrefixCheckReport bad = check_fixed_point_avoidance(m, 0, q1, 10);
  CHECK(!bad.result.ok);
  CHECK(bad.result.violation->position == 1);
}

TEST_CASE("the explored tree can be exported as DOT") {
  std::ostringstream dot;
  AvoidanceQuery q = ternary_query({"12"}, 6);
  max_avoiding(q, &dot);
  const std::string text = dot.str();
  CHECK(text.find("digraph") != std::string::npos);
  CHECK(text.find("\"e\" -> \"1\"") != std::string::npos);
}

TEST_CASE("queries validate their inputs") {
  AvoidanceQuery q = ternary_query({});
  q.forbidden.push_back(Word({}, q.alphabet));
  CHECK_THROWS_AS(max_avoiding(q), std::invalid_argument);
  AvoidanceQuery zero = ternary_query({});
  zero.budget = 0;
  CHECK_THROWS_AS(max_avoiding(zero), std::invalid_argument);
}
