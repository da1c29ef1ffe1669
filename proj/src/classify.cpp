#include "nrw/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrw {

RepetitionKind repetition_kind_of(PropertyKind p) {
  switch (p) {
    case PropertyKind::Squarefree: return RepetitionKind::Square;
    case PropertyKind::Cubefree: return RepetitionKind::Cube;
    case PropertyKind::OverlapFree: return RepetitionKind::Overlap;
    case PropertyKind::WeaklySquarefree: return RepetitionKind::WeakSquare;
    default: throw std::invalid_argument("property has no repetition kind");
  }
}

std::optional<Refutation> refute_over(const Morphism& m, RepetitionKind kind,
                                      std::span<const Word> preimages) {
  for (const Word& w : preimages) {
    const Word image = m.apply(w);
    if (auto wit = find_repetition(image.span(), kind)) return Refutation{w, *wit};
  }
  return std::nullopt;
}

namespace {

// Scans iterates seed, phi(seed), phi^2(seed), ... until the prefix reaches
// min_len. A violation appears first at some iterate whose predecessor is
// still clean; that pair is a checkable refutation.
struct PrefixScan {
  std::optional<Refutation> refutation;
  std::size_t scanned_length = 0;
};

PrefixScan scan_fixed_point(const Morphism& m, Letter seed, RepetitionKind kind,
                            std::size_t min_len) {
  PrefixScan out;
  Word prev(LetterSeq{seed}, m.alphabet());
  Word cur = prev;
  while (true) {
    if (auto wit = find_repetition(cur.span(), kind)) {
      out.refutation = Refutation{prev, *wit};
      return out;
    }
    if (cur.size() >= min_len) {
      out.scanned_length = cur.size();
      return out;
    }
    prev = cur;
    cur = m.apply(cur);
    if (cur.size() <= prev.size() ||
        !std::equal(prev.letters().begin(), prev.letters().end(), cur.letters().begin()))
      throw std::logic_error("prefix stability violated while iterating the morphism");
  }
}

PropertyDecision bounded_decision(const Morphism& m, PropertyKind property, std::size_t test_len,
                                  std::size_t prefix_len) {
  const RepetitionKind kind = repetition_kind_of(property);
  PropertyDecision d{property, Verdict::VerifiedUpTo, {}, std::nullopt, test_len, 0};

  const auto preimages = enumerate_words_up_to(m.alphabet(), test_len, kind_bit(kind));
  if (auto r = refute_over(m, kind, preimages)) {
    d.verdict = Verdict::RefutedBy;
    d.refutation = std::move(r);
    return d;
  }

  std::size_t min_scanned = 0;
  bool first = true;
  for (Letter seed : fixed_point_seeds(m)) {
    PrefixScan s = scan_fixed_point(m, seed, kind, prefix_len);
    if (s.refutation) {
      d.verdict = Verdict::RefutedBy;
      d.refutation = std::move(s.refutation);
      return d;
    }
    min_scanned = first ? s.scanned_length : std::min(min_scanned, s.scanned_length);
    first = false;
  }
  d.prefix_length = min_scanned;
  return d;
}

}  // namespace

PropertyDecision decide_squarefree(const Morphism& m, const ClassifyConfig& cfg) {
  if (m.alphabet().size() != 3)
    return bounded_decision(m, PropertyKind::Squarefree, cfg.test_len, cfg.prefix_len);

  const bool uniform = m.uniform_rank().has_value();
  const std::size_t k = uniform ? 3 : 5;
  const auto preimages = enumerate_words_up_to(m.alphabet(), k, kSquarefree);
  PropertyDecision d{PropertyKind::Squarefree, Verdict::ProvenTrue,
                     uniform ? "crochemore-k3" : "crochemore-k5", std::nullopt, 0, 0};
  if (auto r = refute_over(m, RepetitionKind::Square, preimages)) {
    d.verdict = Verdict::RefutedBy;
    d.criterion.clear();
    d.refutation = std::move(r);
  }
  return d;
}

PropertyDecision check_bounded(const Morphism& m, PropertyKind property, std::size_t test_len,
                               std::size_t prefix_len) {
  switch (property) {
    case PropertyKind::Squarefree:
    case PropertyKind::Cubefree:
    case PropertyKind::OverlapFree:
    case PropertyKind::WeaklySquarefree:
      return bounded_decision(m, property, test_len, prefix_len);
    default:
      throw std::invalid_argument("check_bounded handles the word properties only");
  }
}

std::vector<ThueCondition> thue_necessary_conditions(const Morphism& m) {
  if (m.alphabet().size() != 3)
    throw std::invalid_argument("structural conditions are stated for ternary morphisms");
  const int k = m.alphabet().size();

  bool edges_distinct = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Word &wa = m.image(static_cast<Letter>(a)), &wb = m.image(static_cast<Letter>(b));
      if (wa[0] == wb[0] || wa[wa.size() - 1] == wb[wb.size() - 1]) edges_distinct = false;
    }

  bool edge_adjacent = true;
  bool closed = true;
  for (int a = 0; a < k; ++a) {
    const Word& w = m.image(static_cast<Letter>(a));
    if (w.size() >= 2 && (w[0] == w[1] || w[w.size() - 1] == w[w.size() - 2]))
      edge_adjacent = false;
    if (w[0] != w[w.size() - 1]) closed = false;
  }

  return {
      {"edge-letters-distinct", edges_distinct},
      {"edge-adjacent-differ", edge_adjacent},
      {"first-equals-last", closed},
  };
}

const PropertyDecision& MorphismReport::decision(PropertyKind p) const {
  for (const PropertyDecision& d : decisions)
    if (d.property == p) return d;
  throw std::out_of_range("no decision for property");
}

MorphismReport classify(const Morphism& m, const ClassifyConfig& cfg) {
  MorphismReport rep{m, {}, {}};

  rep.decisions.push_back(decide_squarefree(m, cfg));
  for (PropertyKind p : {PropertyKind::Cubefree, PropertyKind::OverlapFree,
                         PropertyKind::WeaklySquarefree})
    rep.decisions.push_back(check_bounded(m, p, cfg.test_len, cfg.prefix_len));

  const auto seeds = fixed_point_seeds(m);
  rep.decisions.push_back(PropertyDecision{
      PropertyKind::HasFixedPoint,
      seeds.empty() ? Verdict::ProvenFalse : Verdict::ProvenTrue,
      "fixed-point-seed", std::nullopt, 0, 0});

  if (m.alphabet().size() == 3) {
    rep.decisions.push_back(PropertyDecision{
        PropertyKind::Cyclic, is_cyclic(m) ? Verdict::ProvenTrue : Verdict::ProvenFalse,
        "rotation-commute", std::nullopt, 0, 0});
  } else {
    rep.decisions.push_back(PropertyDecision{PropertyKind::Cyclic, Verdict::ProvenFalse,
                                             "requires-ternary-alphabet", std::nullopt, 0, 0});
  }

  const PropertyDecision& cube = rep.decision(PropertyKind::Cubefree);
  const PropertyDecision& ov = rep.decision(PropertyKind::OverlapFree);
  const PropertyDecision& fp = rep.decision(PropertyKind::HasFixedPoint);
  rep.thue.value = !cube.refuted() && !ov.refuted() && fp.verdict == Verdict::ProvenTrue;
  rep.thue.bounded = rep.thue.value;  // cube/overlap are never ProvenTrue here
  if (rep.thue.value) {
    rep.thue.test_word_length = std::min(cube.test_word_length, ov.test_word_length);
    rep.thue.prefix_length = std::min(cube.prefix_length, ov.prefix_length);
  }
  return rep;
}

bool validate_decision(const Morphism& m, const PropertyDecision& d) {
  if (d.verdict != Verdict::RefutedBy) return true;
  if (!d.refutation) return false;
  const Refutation& r = *d.refutation;
  const RepetitionKind kind = repetition_kind_of(d.property);
  if (contains_repetition(r.preimage.span(), kind)) return false;  // preimage must be clean
  const Word image = m.apply(r.preimage);
  return witness_matches(image.span(), r.witness) && r.witness.kind == kind;
}

}  // namespace nrw
