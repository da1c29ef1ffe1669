#include "nrw/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "nrw/avoid.hpp"
#include "nrw/classify.hpp"
#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "nrw/search.hpp"
#include "oracle/oracle.hpp"

namespace nrw::reproduce {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

SearchConfig search_config(const Config& cfg) {
  return SearchConfig{cfg.threads, !cfg.no_prune, cfg.test_len, cfg.prefix_len};
}

std::string word_str(const Word& w) { return io::render_word(w); }

// ---------------------------------------------------------------- censuses

void claim_census_low_ranks(const Config& cfg, Check& c) {
  for (int r = 2; r <= 10; ++r) {
    const SearchReport rep = search_uniform_squarefree(r, search_config(cfg));
    c.expect(rep.survivors.empty(), "rank " + std::to_string(r) + " expected 0 survivors, got " +
                                        std::to_string(rep.survivors.size()));
  }
  if (c.pass) c.note("ranks 2..10: no uniform squarefree morphisms");
}

void claim_census_rank11(const Config& cfg, Check& c) {
  const SearchReport rep = search_uniform_squarefree(11, search_config(cfg));
  c.expect(rep.survivors.size() == 144,
           "expected 144 survivors, got " + std::to_string(rep.survivors.size()));
  const std::string table = io::emit_census_table(rep);
  const std::string golden = fixtures::census_table("census-rank11");
  c.expect(table == golden, "census table differs from the pinned fixture");
  if (c.pass) c.note("144 survivors, byte-identical to the pinned table");
}

void claim_orbit_structure(const Config& cfg, Check& c) {
  const SearchReport rep = search_uniform_squarefree(11, search_config(cfg));
  const auto group = symmetry_transforms();
  c.expect(group.size() == 72, "transform group must have 72 elements");
  const auto classes = orbit_reduce(rep.survivors, group);
  c.expect(classes.size() == 2, "expected 2 orbit classes, got " + std::to_string(classes.size()));
  for (const OrbitClass& cls : classes) {
    c.expect(cls.size == 72, "orbit size " + std::to_string(cls.size) + " != 72");
    c.expect(cls.outside == 0, "orbit leaks outside the survivor set");
    c.expect(72 % cls.size == 0, "orbit size must divide 72");
  }
  if (classes.size() == 2) {
    c.expect(serialize_morphism(classes[0].representative) ==
                 serialize_morphism(fixtures::morphism("phi1-rank11")),
             "first representative is not phi1");
    c.expect(serialize_morphism(classes[1].representative) ==
                 serialize_morphism(fixtures::morphism("phi2-rank11")),
             "second representative is not phi2");
  }
  // Every transform of every survivor stays squarefree.
  std::size_t checked = 0;
  for (const Morphism& m : rep.survivors)
    for (const MorphismTransform& t : group) {
      if (decide_squarefree(transformed(m, t)).verdict != Verdict::ProvenTrue) {
        c.expect(false, "transform of a survivor lost squarefreeness");
        break;
      }
      ++checked;
    }
  if (c.pass)
    c.note("2 orbits of 72 with representatives phi1/phi2; " + std::to_string(checked) +
           " transformed survivors stay squarefree");
}

void claim_crochemore_crosscheck(const Config&, Check& c) {
  const Alphabet t3 = Alphabet::ternary();
  const auto pre_k3 = enumerate_words_up_to(t3, 3, kSquarefree);
  const auto pre_10 = enumerate_words_up_to(t3, 10, kSquarefree);
  std::uint64_t morphisms = 0, disagreements = 0;
  for (int rank = 2; rank <= 6; ++rank) {
    const auto pool = enumerate_words(t3, rank, kSquarefree);
    for (const Word& u : pool)
      for (const Word& v : pool)
        for (const Word& w : pool) {
          const Morphism m(t3, {u, v, w});
          const bool k3_pass = !refute_over(m, RepetitionKind::Square, pre_k3).has_value();
          const bool brute_pass = !refute_over(m, RepetitionKind::Square, pre_10).has_value();
          ++morphisms;
          if (k3_pass != brute_pass) ++disagreements;
        }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.note(std::to_string(morphisms) + " uniform morphisms of rank <= 6 cross-checked");
}

// ------------------------------------------------------------------ sweeps

void sweep_expectations(const SearchReport& rep, Check& c) {
  const std::string tag = "rank " + std::to_string(rep.rank) + ": ";
  c.expect(rep.survivors.empty(),
           tag + std::to_string(rep.survivors.size()) + " non-refuted candidates");
  c.expect(rep.refuted_count == rep.pool_size,
           tag + "refuted " + std::to_string(rep.refuted_count) + " of pool " +
               std::to_string(rep.pool_size));
  c.expect(rep.refutations_validated == rep.refuted_count,
           tag + "only " + std::to_string(rep.refutations_validated) + " of " +
               std::to_string(rep.refuted_count) + " refutations re-validated");
}

void claim_thue_sweep_ternary(const Config& cfg, Check& c) {
  std::uint64_t pool = 0;
  for (int r = 2; r <= 4; ++r) {
    const SearchReport rep = search_weakly_squarefree_thue(r, Alphabet::ternary(), search_config(cfg));
    sweep_expectations(rep, c);
    pool += rep.pool_size;
  }
  if (c.pass)
    c.note("ranks 2..4: all " + std::to_string(pool) + " seeded candidates carry a refutation");
}

void claim_thue_sweep_binary(const Config& cfg, Check& c) {
  std::uint64_t pool = 0;
  for (int r = 2; r <= 6; ++r) {
    const SearchReport rep =
        search_weakly_squarefree_thue(r, Alphabet::binary01(), search_config(cfg));
    sweep_expectations(rep, c);
    pool += rep.pool_size;
  }
  if (c.pass)
    c.note("ranks 2..6: all " + std::to_string(pool) + " seeded candidates carry a refutation");
}

void claim_cyclic_census(const Config& cfg, Check& c) {
  for (int r = 2; r <= 12; ++r) {
    const SearchReport rep = search_cyclic_squarefree(r, search_config(cfg));
    c.expect(rep.survivors.empty(), "rank " + std::to_string(r) + " expected 0 survivors, got " +
                                        std::to_string(rep.survivors.size()));
  }
  const SearchReport r13 = search_cyclic_squarefree(13, search_config(cfg));
  const std::string leech = serialize_morphism(fixtures::morphism("leech"));
  const bool has_leech = std::any_of(r13.survivors.begin(), r13.survivors.end(),
                                     [&](const Morphism& m) { return serialize_morphism(m) == leech; });
  c.expect(has_leech, "rank-13 cyclic squarefree survivors do not contain the Leech morphism");
  c.expect(r13.survivors.size() == 6, "expected the derived count of 6 rank-13 survivors, got " +
                                          std::to_string(r13.survivors.size()));
  // Corroboration: a cyclic squarefree morphism should never acquire a
  // weak-square refutation, for every survivor the census produces.
  for (const Morphism& m : r13.survivors) {
    c.expect(decide_squarefree(m).verdict == Verdict::ProvenTrue, "survivor not proven squarefree");
    const PropertyDecision d = check_bounded(m, PropertyKind::WeaklySquarefree, 8, 10000);
    c.expect(d.verdict == Verdict::VerifiedUpTo,
             "cyclic squarefree survivor " + serialize_morphism(m) + " refuted on weak squares");
  }
  if (c.pass)
    c.note("ranks 2..12 empty; rank 13 has 6 survivors including the Leech morphism, "
           "none refutable on weak squares (K=8, L=10^4)");
}

void claim_triple_property(const Config& cfg, Check& c) {
  for (int r = 2; r <= 12; ++r) {
    const SearchReport rep = search_triple_property(r, search_config(cfg));
    const std::string tag = "rank " + std::to_string(r) + ": ";
    c.expect(rep.survivors.empty(),
             tag + std::to_string(rep.survivors.size()) + " unrefuted survivors");
    const std::uint64_t expected = r == 11 ? 144 : r == 12 ? 216 : 0;
    c.expect(rep.refuted_count == expected,
             tag + "refuted " + std::to_string(rep.refuted_count) + ", expected " +
                 std::to_string(expected));
    c.expect(rep.refutations_validated == rep.refuted_count, tag + "refutation failed validation");
    c.expect(rep.max_refutation_preimage <= 8,
             tag + "refutation preimage longer than 8: " +
                 std::to_string(rep.max_refutation_preimage));
  }

  const MorphismReport leech =
      classify(fixtures::morphism("leech"), ClassifyConfig{cfg.test_len, cfg.prefix_len});
  c.expect(leech.decision(PropertyKind::Squarefree).verdict == Verdict::ProvenTrue,
           "Leech squarefreeness not proven");
  for (PropertyKind p : {PropertyKind::Cubefree, PropertyKind::OverlapFree}) {
    const PropertyDecision& d = leech.decision(p);
    c.expect(d.verdict == Verdict::VerifiedUpTo, io::to_string(p) + " of Leech not VerifiedUpTo");
    c.expect(d.test_word_length == cfg.test_len && d.prefix_length >= cfg.prefix_len,
             io::to_string(p) + " bounds weaker than requested");
  }
  if (c.pass)
    c.note("ranks 2..12: every squarefree survivor refuted on cubes or overlaps "
           "(preimages <= 8); Leech survives at rank 13");
}

// ---------------------------------------------------------------- fixtures

void expect_verdict(Check& c, const MorphismReport& rep, PropertyKind p, Verdict v,
                    const std::string& who) {
  const PropertyDecision& d = rep.decision(p);
  c.expect(d.verdict == v, who + " " + io::to_string(p) + ": expected " + io::to_string(v) +
                               ", got " + io::to_string(d.verdict));
}

// Classically exhibited witnesses are validated as refutations in their own
// right, independently of the (minimal) witnesses the classifier stores.
void expect_exhibited_refutation(Check& c, const Morphism& m, PropertyKind p,
                                 const std::string& preimage_text, const std::string& who) {
  const Word pre = io::parse_word(preimage_text, m.alphabet());
  const Word image = m.apply(pre);
  const auto wit = find_repetition(image.span(), repetition_kind_of(p));
  if (!wit) {
    c.expect(false, who + ": image of " + preimage_text + " carries no " +
                        io::to_string(repetition_kind_of(p)));
    return;
  }
  const PropertyDecision d{p, Verdict::RefutedBy, {}, Refutation{pre, *wit}, 0, 0};
  c.expect(validate_decision(m, d),
           who + ": exhibited witness " + preimage_text + " failed validation");
}

void claim_fixture_reports(const Config&, Check& c) {
  // This claim asserts report facts at the pinned default bounds (8, 10^4),
  // independently of any --bound overrides.
  const ClassifyConfig ccfg{8, 10000};

  {
    const Morphism m = fixtures::morphism("rank5");
    const MorphismReport rep = classify(m, ccfg);
    expect_verdict(c, rep, PropertyKind::Cubefree, Verdict::VerifiedUpTo, "rank5");
    expect_verdict(c, rep, PropertyKind::WeaklySquarefree, Verdict::VerifiedUpTo, "rank5");
    expect_verdict(c, rep, PropertyKind::OverlapFree, Verdict::RefutedBy, "rank5");
    expect_verdict(c, rep, PropertyKind::Squarefree, Verdict::RefutedBy, "rank5");
    expect_verdict(c, rep, PropertyKind::HasFixedPoint, Verdict::ProvenTrue, "rank5");
    expect_verdict(c, rep, PropertyKind::Cyclic, Verdict::ProvenTrue, "rank5");
    for (PropertyKind p : {PropertyKind::Cubefree, PropertyKind::WeaklySquarefree}) {
      const PropertyDecision& d = rep.decision(p);
      c.expect(d.test_word_length == 8 && d.prefix_length == 15625,
               "rank5 " + io::to_string(p) + ": expected bounds (8, 15625), got (" +
                   std::to_string(d.test_word_length) + ", " + std::to_string(d.prefix_length) +
                   ")");
    }
    for (const PropertyDecision& d : rep.decisions)
      c.expect(validate_decision(m, d), "rank5 decision failed validation");
    expect_exhibited_refutation(c, m, PropertyKind::OverlapFree, "212", "rank5");
    expect_exhibited_refutation(c, m, PropertyKind::Squarefree, "212", "rank5");
  }
  {
    const Morphism m = fixtures::morphism("rank4");
    const MorphismReport rep = classify(m, ccfg);
    c.expect(rep.thue.value, "rank4 must classify as a Thue morphism");
    expect_verdict(c, rep, PropertyKind::Squarefree, Verdict::RefutedBy, "rank4");
    expect_verdict(c, rep, PropertyKind::WeaklySquarefree, Verdict::RefutedBy, "rank4");
    expect_verdict(c, rep, PropertyKind::Cubefree, Verdict::VerifiedUpTo, "rank4");
    expect_verdict(c, rep, PropertyKind::OverlapFree, Verdict::VerifiedUpTo, "rank4");
    expect_verdict(c, rep, PropertyKind::HasFixedPoint, Verdict::ProvenTrue, "rank4");
    for (PropertyKind p : {PropertyKind::Squarefree, PropertyKind::WeaklySquarefree})
      c.expect(rep.decision(p).refutation->preimage.size() == 1,
               "rank4 " + io::to_string(p) + " should be refuted by a single letter");
    for (const PropertyDecision& d : rep.decisions)
      c.expect(validate_decision(m, d), "rank4 decision failed validation");
  }
  {
    const Morphism m = fixtures::morphism("rank3");
    const MorphismReport rep = classify(m, ccfg);
    expect_verdict(c, rep, PropertyKind::Cubefree, Verdict::VerifiedUpTo, "rank3");
    expect_verdict(c, rep, PropertyKind::Squarefree, Verdict::RefutedBy, "rank3");
    expect_verdict(c, rep, PropertyKind::WeaklySquarefree, Verdict::RefutedBy, "rank3");
    expect_verdict(c, rep, PropertyKind::OverlapFree, Verdict::RefutedBy, "rank3");
    expect_verdict(c, rep, PropertyKind::HasFixedPoint, Verdict::ProvenTrue, "rank3");
    c.expect(word_str(rep.decision(PropertyKind::Squarefree).refutation->preimage) == "12",
             "rank3 squarefree refutation should use preimage 12");
    c.expect(word_str(rep.decision(PropertyKind::WeaklySquarefree).refutation->preimage) == "123",
             "rank3 weak-square refutation should use preimage 123");
    for (const PropertyDecision& d : rep.decisions)
      c.expect(validate_decision(m, d), "rank3 decision failed validation");
    expect_exhibited_refutation(c, m, PropertyKind::Squarefree, "12", "rank3");
    expect_exhibited_refutation(c, m, PropertyKind::WeaklySquarefree, "123", "rank3");
    expect_exhibited_refutation(c, m, PropertyKind::OverlapFree, "212", "rank3");
  }
  {
    // Binary: the constant morphism 0,1 -> 01 finds no weak-square refutation.
    const Morphism m = io::parse_morphism("0 -> 01\n1 -> 01\n");
    const MorphismReport rep = classify(m, ccfg);
    expect_verdict(c, rep, PropertyKind::WeaklySquarefree, Verdict::VerifiedUpTo, "binary-01");
    // The Thue-Morse morphism is not weakly squarefree: phi(10) = 1001.
    const MorphismReport tm = classify(fixtures::morphism("thue-morse"), ccfg);
    expect_verdict(c, tm, PropertyKind::WeaklySquarefree, Verdict::RefutedBy, "thue-morse");
    expect_verdict(c, tm, PropertyKind::Cubefree, Verdict::VerifiedUpTo, "thue-morse");
    expect_verdict(c, tm, PropertyKind::OverlapFree, Verdict::VerifiedUpTo, "thue-morse");
  }
  if (c.pass) c.note("rank-5/4/3 and binary fixtures report the expected verdict kinds");
}

// ------------------------------------------------------ prefixes, avoidance

// One pass per block length q decides both cubes (run >= 2q) and overlaps
// (run >= q+1); used for the long Thue-Morse prefix.
bool has_cube_or_overlap(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t q = 1; 2 * q + 1 <= n; ++q) {
    std::size_t run = 0;
    for (std::size_t j = n - q; j-- > 0;) {
      run = (w[j] == w[j + q]) ? run + 1 : 0;
      if (run >= q + 1 || run >= 2 * q) return true;
    }
  }
  // blocks longer than (n-1)/2 can still form a bare square-cube; a cube
  // needs 3q <= n < 2q+1 which is impossible, so nothing is missed
  return false;
}

void claim_thue_morse_prefix(const Config&, Check& c) {
  const Morphism tm = fixtures::morphism("thue-morse");
  const Word prefix = fixed_point_prefix(tm, 1, 1u << 16);
  c.expect(prefix.size() == (1u << 16), "prefix should have exactly 2^16 letters");
  c.expect(io::render_word(prefix).substr(0, 16) == "1001011001101001",
           "16-letter prefix mismatch");
  c.expect(!has_cube_or_overlap(prefix.span()), "cube or overlap found in the 2^16 prefix");
  c.expect(!contains_repetition(std::span(prefix.span()).first(4096), RepetitionKind::Cube),
           "cube found by the direct detector");
  c.expect(!contains_repetition(std::span(prefix.span()).first(4096), RepetitionKind::Overlap),
           "overlap found by the direct detector");
  if (c.pass) c.note("2^16-letter prefix is cubefree and overlap-free");
}

void claim_avoidance_maxima(const Config&, Check& c) {
  {
    AvoidanceQuery q{Alphabet::ternary(), {io::parse_word("12", Alphabet::ternary())},
                     kSquarefree, 64};
    const AvoidanceOutcome out = max_avoiding(q);
    c.expect(out.status == AvoidanceOutcome::Status::Exhausted, "forbid 12: tree not exhausted");
    c.expect(out.max_len == 13, "forbid 12: maximum " + std::to_string(out.max_len) + " != 13");
    const Word expected = io::parse_word("bcbacbcacbaca");
    const bool found = std::any_of(out.witnesses.begin(), out.witnesses.end(),
                                   [&](const Word& w) { return w.letters() == expected.letters(); });
    c.expect(found, "forbid 12: witness bcbacbcacbaca missing");
    c.expect(out.witnesses.size() == 1, "forbid 12: derived witness count is 1");
  }
  {
    AvoidanceQuery q{Alphabet::ternary(), {io::parse_word("123", Alphabet::ternary())},
                     kSquarefree, 64};
    const AvoidanceOutcome out = max_avoiding(q);
    c.expect(out.status == AvoidanceOutcome::Status::Exhausted, "forbid 123: tree not exhausted");
    c.expect(out.max_len <= 36, "forbid 123: maximum exceeds the bound 36");
    c.expect(out.max_len == 29, "forbid 123: derived maximum is 29, got " +
                                    std::to_string(out.max_len));
    c.expect(out.witnesses.size() == 1 &&
                 io::render_word(out.witnesses[0], Style::Digits1) ==
                     "23132312132313213121323121312",
             "forbid 123: derived witness mismatch");
  }
  {
    AvoidanceQuery q{Alphabet::binary01(), {}, static_cast<KindMask>(kCubefree | kWeaklySquarefree),
                     64};
    const AvoidanceOutcome out = max_avoiding(q);
    c.expect(out.status == AvoidanceOutcome::Status::Exhausted, "binary: tree not exhausted");
    c.expect(out.max_len == 5, "binary cubefree+weakly-squarefree maximum " +
                                   std::to_string(out.max_len) + " != 5");
    std::vector<std::string> ws;
    for (const Word& w : out.witnesses) ws.push_back(io::render_word(w));
    std::sort(ws.begin(), ws.end());
    c.expect(ws == std::vector<std::string>{"01010", "10101"}, "binary witnesses mismatch");
  }
  {
    // Over four letters the tree is infinite; the budget is hit instead.
    AvoidanceQuery q{Alphabet(4), {io::parse_word("12", Alphabet(4))}, kSquarefree, 40};
    const AvoidanceOutcome out = max_avoiding(q);
    c.expect(out.status == AvoidanceOutcome::Status::Open && out.max_len == 40,
             "4-letter alphabet: expected an open tree at the budget");
  }
  if (c.pass) c.note("maxima: forbid ab -> 13, forbid abc -> 29 (<= 36), binary conjunction -> 5");
}

void claim_word718(const Config&, Check& c) {
  const Word w = fixtures::word("word718");
  c.expect(w.size() == 718, "fixture length != 718");
  AvoidanceQuery q{w.alphabet(),
                   {io::parse_word("aba", w.alphabet()), io::parse_word("bab", w.alphabet())},
                   kSquarefree, 1};
  const VerifyResult res = verify_avoidance(w, q);
  if (!res.ok && res.violation) {
    std::string what = res.violation->type == AvoidanceViolation::Type::ForbiddenFactor
                           ? "forbidden factor " + io::render_word(*res.violation->factor)
                           : "repetition";
    c.expect(false, "718-letter word: " + what + " at position " +
                        std::to_string(res.violation->position));
  } else {
    c.expect(res.ok, "verification failed without a violation");
  }
  if (c.pass) c.note("squarefree and avoids both aba and bab");
}

void claim_thue1912_prefix(const Config&, Check& c) {
  const Morphism m = fixtures::morphism("thue-1912");
  const Word prefix = fixed_point_prefix(m, 0, 100000);
  const auto head = std::span(prefix.span()).first(100000);
  c.expect(is_squarefree(head), "square found in the 10^5-letter prefix");
  if (c.pass) c.note("10^5-letter prefix is squarefree");
}

void claim_cbc_avoidance(const Config&, Check& c) {
  const Morphism m = fixtures::morphism("thue-1912");
  const Word prefix = fixed_point_prefix(m, 0, 100000);
  const Word cbc = io::parse_word("cbc", m.alphabet());
  const auto head = std::span(prefix.span()).first(100000);
  auto it = std::search(head.begin(), head.end(), cbc.letters().begin(), cbc.letters().end());
  if (it != head.end()) {
    c.expect(false, "factor cbc occurs at position " +
                        std::to_string(static_cast<std::size_t>(it - head.begin()) + 1));
  }
  if (c.pass) c.note("10^5-letter prefix avoids cbc");
}

// ---------------------------------------------------------- property suites

Word random_word(std::mt19937& rng, const Alphabet& a, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, a.size() - 1);
  LetterSeq s(len_dist(rng));
  for (Letter& l : s) l = static_cast<Letter>(letter_dist(rng));
  return Word(std::move(s), a);
}

bool witnesses_agree(std::span<const Letter> w) {
  for (RepetitionKind k : {RepetitionKind::Square, RepetitionKind::Cube, RepetitionKind::Overlap,
                           RepetitionKind::WeakSquare}) {
    const auto fast = find_repetition(w, k);
    const auto slow = oracle::find_naive(w, k);
    if (fast.has_value() != slow.has_value()) return false;
    if (fast && !(*fast == *slow)) return false;
    if (fast && !witness_matches(w, *fast)) return false;
  }
  return true;
}

void claim_property_suites(const Config& cfg, Check& c) {
  // Detector vs oracle, exhaustive over binary and ternary words up to 12.
  for (int k = 2; k <= 3; ++k) {
    const Alphabet a(k);
    LetterSeq buf;
    std::uint64_t bad = 0;
    std::function<void()> rec = [&] {
      if (!witnesses_agree({buf.data(), buf.size()})) ++bad;
      if (buf.size() == 12) return;
      for (int l = 0; l < k; ++l) {
        buf.push_back(static_cast<Letter>(l));
        rec();
        buf.pop_back();
      }
    };
    rec();
    c.expect(bad == 0, "detector/oracle disagreements on the exhaustive sweep (alphabet " +
                           std::to_string(k) + "): " + std::to_string(bad));
  }

  std::mt19937 rng(20250811);
  // Random long words.
  for (int t = 0; t < 10000; ++t) {
    const Alphabet a(2 + t % 3);
    const Word w = random_word(rng, a, 200);
    if (!witnesses_agree(w.span())) {
      c.expect(false, "detector/oracle disagreement on a random word");
      break;
    }
  }

  // Containment: an overlap or cube forces a square; a trivial weak square
  // (period 0) is one.
  for (int t = 0; t < 2000; ++t) {
    const Word w = random_word(rng, Alphabet(2 + t % 3), 60);
    const bool sq = contains_repetition(w.span(), RepetitionKind::Square);
    if (contains_repetition(w.span(), RepetitionKind::Overlap) && !sq)
      c.expect(false, "overlap without a square");
    if (contains_repetition(w.span(), RepetitionKind::Cube) && !sq)
      c.expect(false, "cube without a square");
  }

  // Homomorphism law on random morphisms.
  const Alphabet t3 = Alphabet::ternary();
  for (int t = 0; t < 10000; ++t) {
    std::vector<Word> images;
    for (int i = 0; i < 3; ++i) {
      Word img = random_word(rng, t3, 5);
      if (img.empty()) img = Word(LetterSeq{0}, t3);
      images.push_back(img);
    }
    const Morphism m(t3, images);
    const Word u = random_word(rng, t3, 12), v = random_word(rng, t3, 12);
    if (!(m.apply(concat(u, v)) == concat(m.apply(u), m.apply(v)))) {
      c.expect(false, "homomorphism law violated");
      break;
    }
  }

  // Cyclic transport: apply then rotate equals rotate then apply.
  for (int t = 0; t < 10000; ++t) {
    Word base = random_word(rng, t3, 8);
    if (base.empty()) base = Word(LetterSeq{0}, t3);
    const Morphism m(t3, {base, shifted(base, +1), shifted(shifted(base, +1), +1)});
    if (!is_cyclic(m)) {
      c.expect(false, "constructed rotation morphism not recognized as cyclic");
      break;
    }
    const Word w = random_word(rng, t3, 20);
    if (!(m.apply(shifted(w, +1)) == shifted(m.apply(w), +1))) {
      c.expect(false, "cyclic transport violated");
      break;
    }
  }

  // Shift bijection and monotone words.
  for (int t = 0; t < 10000; ++t) {
    const Word w = random_word(rng, t3, 30);
    if (!(shifted(shifted(w, +1), -1) == w)) {
      c.expect(false, "shift bijection violated");
      break;
    }
    if (is_increasing(w) && is_decreasing(w) && w.size() > 1) {
      c.expect(false, "a word of length > 1 is both increasing and decreasing");
      break;
    }
  }

  // Prefix stability for every seed of the bundled morphisms.
  for (const char* name : {"thue-morse", "thue-1912", "leech", "rank5", "rank4", "rank3"}) {
    const Morphism m = fixtures::morphism(name);
    for (Letter seed : fixed_point_seeds(m)) {
      Word prev(LetterSeq{seed}, m.alphabet());
      while (prev.size() < 20000) {
        const Word next = m.apply(prev);
        if (!std::equal(prev.letters().begin(), prev.letters().end(), next.letters().begin())) {
          c.expect(false, std::string(name) + ": prefix stability violated");
          break;
        }
        prev = next;
      }
    }
  }

  // Pruned enumeration equals generate-then-filter.
  for (int k = 2; k <= 3; ++k) {
    const Alphabet a(k);
    for (KindMask mask : {kSquarefree, kCubefree, kOverlapFree, kWeaklySquarefree,
                          static_cast<KindMask>(kCubefree | kWeaklySquarefree)}) {
      for (std::size_t n = 0; n <= 8; ++n) {
        if (enumerate_words(a, n, mask) != oracle::enumerate_filtered(a, n, mask)) {
          c.expect(false, "pruned enumeration differs from filtered enumeration");
          break;
        }
      }
    }
  }

  // Pruned census equals the exhaustive census at small ranks.
  for (int r = 2; r <= 6; ++r) {
    SearchConfig pruned = search_config(cfg);
    pruned.prune = true;
    SearchConfig full = pruned;
    full.prune = false;
    const SearchReport a = search_uniform_squarefree(r, pruned);
    const SearchReport b = search_uniform_squarefree(r, full);
    if (io::emit_census_table(a) != io::emit_census_table(b)) {
      c.expect(false, "pruned and unpruned censuses differ at rank " + std::to_string(r));
      break;
    }
  }

  // Census table is byte-stable across thread counts.
  {
    SearchConfig one = search_config(cfg);
    one.threads = 1;
    SearchConfig many = search_config(cfg);
    many.threads = 4;
    c.expect(io::emit_census_table(search_uniform_squarefree(11, one)) ==
                 io::emit_census_table(search_uniform_squarefree(11, many)),
             "census table differs between 1 and 4 threads");
  }

  if (c.pass)
    c.note("oracle equivalence (exhaustive <= 12 plus 10^4 random), algebraic laws, "
           "prefix stability, pruning equivalences: all green");
}

// ------------------------------------------------------------------- table

struct ClaimSpec {
  const char* name;
  void (*fn)(const Config&, Check&);
};

constexpr ClaimSpec kClaims[] = {
    {"census-ranks-2-10", claim_census_low_ranks},
    {"census-rank-11", claim_census_rank11},
    {"orbit-structure", claim_orbit_structure},
    {"crochemore-crosscheck", claim_crochemore_crosscheck},
    {"thue-sweep-ternary", claim_thue_sweep_ternary},
    {"thue-sweep-binary", claim_thue_sweep_binary},
    {"cyclic-census", claim_cyclic_census},
    {"triple-property", claim_triple_property},
    {"fixture-reports", claim_fixture_reports},
    {"thue-morse-prefix", claim_thue_morse_prefix},
    {"avoidance-maxima", claim_avoidance_maxima},
    {"word718-verifies", claim_word718},
    {"thue1912-prefix-squarefree", claim_thue1912_prefix},
    {"cbc-avoidance", claim_cbc_avoidance},
    {"property-suites", claim_property_suites},
};

}  // namespace

std::vector<std::string> claim_names() {
  std::vector<std::string> names;
  for (const ClaimSpec& s : kClaims) names.emplace_back(s.name);
  return names;
}

ClaimResult run_claim(const std::string& name, const Config& cfg) {
  for (const ClaimSpec& s : kClaims) {
    if (name != s.name) continue;
    ClaimResult res;
    res.name = name;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      s.fn(cfg, check);
      res.pass = check.pass;
      res.detail = check.detail.str();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return res;
  }
  throw std::invalid_argument("unknown claim: " + name);
}

std::vector<ClaimResult> run_all(const Config& cfg, std::ostream* progress) {
  std::vector<ClaimResult> results;
  for (const ClaimSpec& s : kClaims) {
    results.push_back(run_claim(s.name, cfg));
    if (progress) {
      const ClaimResult& r = results.back();
      (*progress) << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.elapsed.count()
                  << " ms)";
      if (!r.detail.empty()) (*progress) << "  -- " << r.detail;
      (*progress) << std::endl;
    }
  }
  return results;
}

}  // namespace nrw::reproduce
