#include "nrw/avoid.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace nrw {

namespace {

bool forbidden_at_end(std::span<const Letter> w, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    const std::size_t fl = f.size();
    if (fl == 0 || fl > w.size()) continue;
    if (std::equal(f.letters().begin(), f.letters().end(), w.end() - fl)) return true;
  }
  return false;
}

std::string dot_label(std::span<const Letter> w, const Alphabet& a) {
  if (w.empty()) return "e";
  std::string s;
  for (Letter l : w) s += a.symbol(l);
  return s;
}

struct Dfs {
  const AvoidanceQuery& query;
  std::ostream* dot;
  LetterSeq buf;
  AvoidanceOutcome out;
  bool open_hit = false;

  void run() {
    if (dot) *dot << "digraph avoidance {\n";
    out.max_len = 0;
    out.witnesses.clear();
    visit();
    if (dot) *dot << "}\n";
    if (open_hit) {
      out.status = AvoidanceOutcome::Status::Open;
      out.max_len = query.budget;
      // keep only the first (lex-least) budget-length witness
      if (out.witnesses.size() > 1) out.witnesses.resize(1);
    } else {
      out.status = AvoidanceOutcome::Status::Exhausted;
    }
  }

  void record() {
    if (buf.size() > out.max_len) {
      out.max_len = buf.size();
      out.witnesses.clear();
    }
    if (buf.size() == out.max_len)
      out.witnesses.emplace_back(buf, query.alphabet);
  }

  // Returns false to abort the whole search (budget reached: the tree is not
  // finite within the budget, one sample witness suffices).
  bool visit() {
    ++out.nodes_visited;
    record();
    if (buf.size() >= query.budget) {
      open_hit = true;
      return false;
    }
    const int k = query.alphabet.size();
    for (int c = 0; c < k; ++c) {
      buf.push_back(static_cast<Letter>(c));
      const std::span<const Letter> w{buf.data(), buf.size()};
      bool keep_going = true;
      if (extension_clean(w, query.property) && !forbidden_at_end(w, query.forbidden)) {
        if (dot) {
          *dot << "  \"" << dot_label({buf.data(), buf.size() - 1}, query.alphabet) << "\" -> \""
               << dot_label(w, query.alphabet) << "\";\n";
        }
        keep_going = visit();
      }
      buf.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

AvoidanceOutcome max_avoiding(const AvoidanceQuery& query, std::ostream* dot) {
  for (const Word& f : query.forbidden)
    if (f.empty()) throw std::invalid_argument("forbidden factors must be non-empty");
  if (query.budget < 1) throw std::invalid_argument("budget must be >= 1");
  Dfs dfs{query, dot, {}, {}, false};
  dfs.run();
  return dfs.out;
}

VerifyResult verify_avoidance(const Word& word, const AvoidanceQuery& query) {
  std::optional<AvoidanceViolation> best;
  const auto consider = [&](AvoidanceViolation v) {
    if (!best || v.position < best->position) best = std::move(v);
  };

  for (RepetitionKind k : {RepetitionKind::Square, RepetitionKind::Cube, RepetitionKind::Overlap,
                           RepetitionKind::WeakSquare}) {
    if (!(query.property & kind_bit(k))) continue;
    if (auto wit = find_repetition(word.span(), k))
      consider({AvoidanceViolation::Type::Repetition, wit->start, *wit, std::nullopt});
  }

  for (const Word& f : query.forbidden) {
    if (f.empty() || f.size() > word.size()) continue;
    auto it = std::search(word.letters().begin(), word.letters().end(), f.letters().begin(),
                          f.letters().end());
    if (it != word.letters().end()) {
      const std::size_t pos = static_cast<std::size_t>(it - word.letters().begin()) + 1;
      consider({AvoidanceViolation::Type::ForbiddenFactor, pos, std::nullopt, f});
    }
  }

  if (best) return {false, std::move(best)};
  return {true, std::nullopt};
}

PrefixCheckReport check_fixed_point_avoidance(const Morphism& m, Letter seed,
                                              const AvoidanceQuery& query, std::size_t min_len) {
  const Word prefix = fixed_point_prefix(m, seed, min_len);
  PrefixCheckReport rep{m, seed, prefix.size(), verify_avoidance(prefix, query)};
  return rep;
}

}  // namespace nrw
