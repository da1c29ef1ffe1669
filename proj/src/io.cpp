#include "nrw/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nrw::io {

Style infer_style(std::string_view text) {
  bool saw_zero = false;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') return Style::Letters;
    if (c == '0') saw_zero = true;
  }
  return saw_zero ? Style::Digits0 : Style::Digits1;
}

std::optional<Letter> parse_letter(char c, Style style) {
  switch (style) {
    case Style::Digits1:
      if (c >= '1' && c <= '9') return static_cast<Letter>(c - '1');
      break;
    case Style::Digits0:
      if (c >= '0' && c <= '9') return static_cast<Letter>(c - '0');
      break;
    case Style::Letters:
      if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a');
      break;
  }
  return std::nullopt;
}

Word parse_word(std::string_view text, std::optional<Alphabet> alphabet) {
  const Style style = alphabet ? alphabet->style() : infer_style(text);
  LetterSeq letters;
  letters.reserve(text.size());
  Letter max_seen = 0;
  for (char c : text) {
    auto l = parse_letter(c, style);
    if (!l && alphabet) {
      // aliasing against an explicit alphabet: a=1, b=2, c=3
      for (Style alias : {Style::Letters, Style::Digits1})
        if (alias != style && !l) l = parse_letter(c, alias);
    }
    if (!l) throw std::invalid_argument(std::string("bad letter '") + c + "' in word");
    letters.push_back(*l);
    max_seen = std::max(max_seen, *l);
  }
  const Alphabet a = alphabet ? *alphabet : Alphabet(letters.empty() ? 1 : max_seen + 1, style);
  return Word(std::move(letters), a);
}

std::string render_word(const Word& w) { return render_word(w, w.alphabet().style()); }

std::string render_word(const Word& w, Style style) {
  const Alphabet a(w.alphabet().size(), style);
  std::string s;
  s.reserve(w.size());
  for (Letter l : w.letters()) s += a.symbol(l);
  return s;
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace

Morphism parse_morphism(std::string_view text) {
  struct Rule {
    char lhs;
    std::string rhs;
  };
  std::vector<Rule> rules;
  std::string all_chars;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("morphism line missing '->': " + std::string(line));
    const std::string_view lhs = trim(line.substr(0, arrow));
    const std::string_view rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != 1) throw std::invalid_argument("left side must be a single letter");
    if (rhs.empty()) throw std::invalid_argument("empty image (morphism must be non-erasing)");
    rules.push_back({lhs[0], std::string(rhs)});
    all_chars += lhs[0];
    all_chars += rhs;
  }
  if (rules.empty()) throw std::invalid_argument("no morphism rules found");

  const Style style = infer_style(all_chars);
  const int k = static_cast<int>(rules.size());
  const Alphabet alphabet(k, style);

  std::vector<std::optional<Word>> images(k);
  for (const Rule& r : rules) {
    const auto lhs = parse_letter(r.lhs, style);
    if (!lhs || *lhs >= k)
      throw std::invalid_argument(std::string("letter '") + r.lhs +
                                  "' outside the inferred alphabet");
    if (images[*lhs]) throw std::invalid_argument(std::string("duplicate rule for '") + r.lhs + "'");
    images[*lhs] = parse_word(r.rhs, alphabet);
  }
  std::vector<Word> built;
  built.reserve(k);
  for (int i = 0; i < k; ++i) {
    if (!images[i])
      throw std::invalid_argument("alphabet letters must be contiguous from the first symbol");
    built.push_back(*images[i]);
  }
  return Morphism(alphabet, std::move(built));
}

std::string render_morphism(const Morphism& m) {
  std::string out;
  for (int a = 0; a < m.alphabet().size(); ++a) {
    out += m.alphabet().symbol(static_cast<Letter>(a));
    out += " -> ";
    out += render_word(m.image(static_cast<Letter>(a)));
    out += '\n';
  }
  return out;
}

std::string to_string(PropertyKind p) {
  switch (p) {
    case PropertyKind::Squarefree: return "squarefree";
    case PropertyKind::Cubefree: return "cubefree";
    case PropertyKind::OverlapFree: return "overlap-free";
    case PropertyKind::WeaklySquarefree: return "weakly-squarefree";
    case PropertyKind::HasFixedPoint: return "has-fixed-point";
    case PropertyKind::Cyclic: return "cyclic";
  }
  return "?";
}

std::string to_string(RepetitionKind k) {
  switch (k) {
    case RepetitionKind::Square: return "square";
    case RepetitionKind::Cube: return "cube";
    case RepetitionKind::Overlap: return "overlap";
    case RepetitionKind::WeakSquare: return "weak-square";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvenTrue: return "proven-true";
    case Verdict::ProvenFalse: return "proven-false";
    case Verdict::RefutedBy: return "refuted-by";
    case Verdict::VerifiedUpTo: return "verified-up-to";
  }
  return "?";
}

std::string emit_census_table(const SearchReport& report) {
  std::string out = "phi(1) phi(2) phi(3)\n";
  std::vector<std::string> rows;
  rows.reserve(report.survivors.size());
  for (const Morphism& m : report.survivors) {
    std::string row;
    for (int a = 0; a < m.alphabet().size(); ++a) {
      if (a) row += ' ';
      row += render_word(m.image(static_cast<Letter>(a)), Style::Digits1);
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

ordered_json witness_json(const RepetitionWitness& w) {
  return ordered_json{{"kind", to_string(w.kind)},
                      {"start", w.start},
                      {"period", w.period},
                      {"total_length", w.total_length}};
}

ordered_json decision_json(const PropertyDecision& d) {
  ordered_json j{{"property", to_string(d.property)}, {"verdict", to_string(d.verdict)}};
  switch (d.verdict) {
    case Verdict::ProvenTrue:
    case Verdict::ProvenFalse:
      j["criterion"] = d.criterion;
      break;
    case Verdict::RefutedBy:
      j["preimage"] = render_word(d.refutation->preimage);
      j["witness"] = witness_json(d.refutation->witness);
      break;
    case Verdict::VerifiedUpTo:
      j["test_word_length"] = d.test_word_length;
      j["prefix_length"] = d.prefix_length;
      break;
  }
  return j;
}

ordered_json morphism_json(const Morphism& m) {
  ordered_json images = ordered_json::object();
  for (int a = 0; a < m.alphabet().size(); ++a) {
    const std::string key(1, m.alphabet().symbol(static_cast<Letter>(a)));
    images[key] = render_word(m.image(static_cast<Letter>(a)));
  }
  return ordered_json{{"alphabet_size", m.alphabet().size()}, {"images", images}};
}

ordered_json report_json(const MorphismReport& rep) {
  ordered_json decisions = ordered_json::array();
  for (const PropertyDecision& d : rep.decisions) decisions.push_back(decision_json(d));
  ordered_json thue{{"value", rep.thue.value}, {"bounded", rep.thue.bounded}};
  if (rep.thue.value && rep.thue.bounded) {
    thue["test_word_length"] = rep.thue.test_word_length;
    thue["prefix_length"] = rep.thue.prefix_length;
  }
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"morphism", morphism_json(rep.morphism)},
                      {"decisions", decisions},
                      {"thue_morphism", thue}};
}

ordered_json search_json(const SearchReport& rep, bool include_timings) {
  ordered_json survivors = ordered_json::array();
  for (const Morphism& m : rep.survivors) survivors.push_back(serialize_morphism(m));
  ordered_json j{{"schema_version", kSchemaVersion},
                 {"kind", rep.kind},
                 {"rank", rep.rank},
                 {"alphabet_size", rep.alphabet.size()},
                 {"candidate_pool_size", rep.pool_size},
                 {"survivor_count", rep.survivors.size()},
                 {"survivors", survivors}};
  if (!rep.orbit_classes.empty()) {
    ordered_json orbits = ordered_json::array();
    for (const OrbitClass& c : rep.orbit_classes)
      orbits.push_back(ordered_json{{"representative", serialize_morphism(c.representative)},
                                    {"size", c.size},
                                    {"outside", c.outside}});
    j["orbit_classes"] = orbits;
  }
  if (rep.refuted_count) {
    j["refuted"] = rep.refuted_count;
    j["refutations_validated"] = rep.refutations_validated;
    ordered_json samples = ordered_json::array();
    for (const SweepRefutation& s : rep.refutation_samples)
      samples.push_back(ordered_json{{"candidate", serialize_morphism(s.candidate)},
                                     {"decision", decision_json(s.decision)}});
    j["refutation_samples"] = samples;
  }
  if (include_timings) j["wall_time_ms"] = rep.wall_time.count();
  return j;
}

ordered_json avoidance_json(const AvoidanceOutcome& out) {
  ordered_json witnesses = ordered_json::array();
  for (const Word& w : out.witnesses) witnesses.push_back(render_word(w));
  return ordered_json{
      {"status", out.status == AvoidanceOutcome::Status::Exhausted ? "exhausted" : "open"},
      {"max_length", out.max_len},
      {"witnesses", witnesses},
      {"nodes_visited", out.nodes_visited}};
}

ordered_json verify_json(const VerifyResult& res) {
  ordered_json j{{"ok", res.ok}};
  if (res.violation) {
    ordered_json v{{"position", res.violation->position}};
    if (res.violation->type == AvoidanceViolation::Type::Repetition) {
      v["type"] = "repetition";
      v["witness"] = witness_json(*res.violation->witness);
    } else {
      v["type"] = "forbidden-factor";
      v["factor"] = render_word(*res.violation->factor);
    }
    j["violation"] = v;
  }
  return j;
}

ordered_json prefix_check_json(const PrefixCheckReport& rep) {
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"morphism", morphism_json(rep.morphism)},
                      {"seed", std::string(1, rep.morphism.alphabet().symbol(rep.seed))},
                      {"prefix_length", rep.prefix_length},
                      {"result", verify_json(rep.result)}};
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace nrw::io
