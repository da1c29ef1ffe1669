#include "nrw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrw {

Alphabet::Alphabet(int size, Style style) : size_(static_cast<std::uint8_t>(size)), style_(style) {
  if (size < 1 || size > 9) throw std::invalid_argument("alphabet size must be in 1..9");
}

char Alphabet::symbol(Letter l) const {
  if (l >= size_) throw std::invalid_argument("letter outside alphabet");
  switch (style_) {
    case Style::Digits1: return static_cast<char>('1' + l);
    case Style::Digits0: return static_cast<char>('0' + l);
    case Style::Letters: return static_cast<char>('a' + l);
  }
  return '?';
}

Word::Word(LetterSeq letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  for (Letter l : letters_)
    if (l >= alphabet_.size()) throw std::invalid_argument("letter outside alphabet");
}

Word concat(const Word& a, const Word& b) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("alphabet mismatch");
  LetterSeq s;
  s.reserve(a.size() + b.size());
  s.insert(s.end(), a.letters().begin(), a.letters().end());
  s.insert(s.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(s), a.alphabet());
}

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

std::size_t total_length_for(RepetitionKind kind, std::size_t period) {
  switch (kind) {
    case RepetitionKind::Square: return 2 * period;
    case RepetitionKind::Cube: return 3 * period;
    case RepetitionKind::Overlap: return 2 * period + 3;
    case RepetitionKind::WeakSquare: return 2 * period + 2;
  }
  return 0;
}

// For a fixed block length q, one right-to-left pass computing the run of
// matches between positions j and j+q decides squares (run >= q), cubes
// (run >= 2q) and overlaps (run >= q+1, block q = period+1) at every start.
// Minimal start for that q is the last hit of the descending scan.
template <class Hit>
void scan_matches(std::span<const Letter> w, std::size_t q, Hit&& hit) {
  const std::size_t n = w.size();
  std::size_t run = 0;
  for (std::size_t j = n - q; j-- > 0;) {
    run = (w[j] == w[j + q]) ? run + 1 : 0;
    hit(j, run);
  }
}

std::size_t min_start_square(std::span<const Letter> w, std::size_t p) {
  std::size_t best = kNpos;
  scan_matches(w, p, [&](std::size_t j, std::size_t run) {
    if (run >= p) best = j;
  });
  return best;
}

std::size_t min_start_cube(std::span<const Letter> w, std::size_t p) {
  std::size_t best = kNpos;
  scan_matches(w, p, [&](std::size_t j, std::size_t run) {
    if (run >= 2 * p) best = j;
  });
  return best;
}

std::size_t min_start_overlap(std::span<const Letter> w, std::size_t q) {
  std::size_t best = kNpos;
  scan_matches(w, q, [&](std::size_t j, std::size_t run) {
    if (run >= q + 1) best = j;
  });
  return best;
}

// Weak square aXXa at i: inner square of period p at i+1 plus equal flanks.
std::size_t min_start_weak(std::span<const Letter> w, std::size_t p) {
  const std::size_t n = w.size();
  std::size_t best = kNpos;
  if (p == 0) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (w[i] == w[i + 1]) return i;
    return kNpos;
  }
  scan_matches(w, p, [&](std::size_t j, std::size_t run) {
    if (j == 0 || run < p) return;
    const std::size_t i = j - 1;
    if (i + 2 * p + 1 < n && w[i] == w[i + 2 * p + 1]) best = i;
  });
  return best;
}

}  // namespace

std::optional<RepetitionWitness> find_repetition(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  std::size_t best_start = kNpos, best_period = 0;
  const auto consider = [&](std::size_t start, std::size_t period) {
    if (start < best_start) {
      best_start = start;
      best_period = period;
    }
  };
  switch (kind) {
    case RepetitionKind::Square:
      for (std::size_t p = 1; 2 * p <= n && best_start != 0; ++p)
        if (std::size_t i = min_start_square(w, p); i != kNpos) consider(i, p);
      break;
    case RepetitionKind::Cube:
      for (std::size_t p = 1; 3 * p <= n && best_start != 0; ++p)
        if (std::size_t i = min_start_cube(w, p); i != kNpos) consider(i, p);
      break;
    case RepetitionKind::Overlap:
      for (std::size_t q = 1; 2 * q + 1 <= n && best_start != 0; ++q)
        if (std::size_t i = min_start_overlap(w, q); i != kNpos) consider(i, q - 1);
      break;
    case RepetitionKind::WeakSquare:
      for (std::size_t p = 0; 2 * p + 2 <= n && best_start != 0; ++p)
        if (std::size_t i = min_start_weak(w, p); i != kNpos) consider(i, p);
      break;
  }
  if (best_start == kNpos) return std::nullopt;
  return RepetitionWitness{kind, best_start + 1, best_period, total_length_for(kind, best_period)};
}

bool contains_repetition(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  switch (kind) {
    case RepetitionKind::Square:
      for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = n - p; j-- > 0;) {
          run = (w[j] == w[j + p]) ? run + 1 : 0;
          if (run >= p) return true;
        }
      }
      return false;
    case RepetitionKind::Cube:
      for (std::size_t p = 1; 3 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = n - p; j-- > 0;) {
          run = (w[j] == w[j + p]) ? run + 1 : 0;
          if (run >= 2 * p) return true;
        }
      }
      return false;
    case RepetitionKind::Overlap:
      for (std::size_t q = 1; 2 * q + 1 <= n; ++q) {
        std::size_t run = 0;
        for (std::size_t j = n - q; j-- > 0;) {
          run = (w[j] == w[j + q]) ? run + 1 : 0;
          if (run >= q + 1) return true;
        }
      }
      return false;
    case RepetitionKind::WeakSquare:
      for (std::size_t p = 0; 2 * p + 2 <= n; ++p)
        if (min_start_weak(w, p) != kNpos) return true;
      return false;
  }
  return false;
}

std::optional<RepetitionWitness> find_square(const Word& w) {
  return find_repetition(w.span(), RepetitionKind::Square);
}
std::optional<RepetitionWitness> find_cube(const Word& w) {
  return find_repetition(w.span(), RepetitionKind::Cube);
}
std::optional<RepetitionWitness> find_overlap(const Word& w) {
  return find_repetition(w.span(), RepetitionKind::Overlap);
}
std::optional<RepetitionWitness> find_weak_square(const Word& w) {
  return find_repetition(w.span(), RepetitionKind::WeakSquare);
}

bool is_clean(std::span<const Letter> w, KindMask avoid) {
  for (RepetitionKind k : {RepetitionKind::Square, RepetitionKind::Cube,
                           RepetitionKind::Overlap, RepetitionKind::WeakSquare})
    if ((avoid & kind_bit(k)) && contains_repetition(w, k)) return false;
  return true;
}

bool extension_clean(std::span<const Letter> w, KindMask avoid) {
  const std::size_t n = w.size();
  const Letter* d = w.data();
  if (avoid & kSquarefree) {
    for (std::size_t p = 1; 2 * p <= n; ++p)
      if (std::equal(d + n - 2 * p, d + n - p, d + n - p)) return false;
  }
  if (avoid & kCubefree) {
    for (std::size_t p = 1; 3 * p <= n; ++p)
      if (std::equal(d + n - 3 * p, d + n - 2 * p, d + n - 2 * p) &&
          std::equal(d + n - 2 * p, d + n - p, d + n - p))
        return false;
  }
  if (avoid & kOverlapFree) {
    for (std::size_t p = 0; 2 * p + 3 <= n; ++p) {
      const std::size_t i = n - (2 * p + 3);
      if (d[i] == d[i + p + 1] && d[i] == d[i + 2 * p + 2] &&
          std::equal(d + i + 1, d + i + p + 1, d + i + p + 2))
        return false;
    }
  }
  if (avoid & kWeaklySquarefree) {
    for (std::size_t p = 0; 2 * p + 2 <= n; ++p) {
      const std::size_t i = n - (2 * p + 2);
      if (d[i] == d[n - 1] && std::equal(d + i + 1, d + i + p + 1, d + i + p + 1))
        return false;
    }
  }
  return true;
}

bool witness_matches(std::span<const Letter> w, const RepetitionWitness& wit) {
  if (wit.start < 1) return false;
  const std::size_t i = wit.start - 1, p = wit.period;
  if (wit.total_length != total_length_for(wit.kind, p)) return false;
  if (i + wit.total_length > w.size()) return false;
  const Letter* d = w.data() + i;
  switch (wit.kind) {
    case RepetitionKind::Square:
      return p >= 1 && std::equal(d, d + p, d + p);
    case RepetitionKind::Cube:
      return p >= 1 && std::equal(d, d + p, d + p) && std::equal(d + p, d + 2 * p, d + 2 * p);
    case RepetitionKind::Overlap:
      return d[0] == d[p + 1] && d[0] == d[2 * p + 2] && std::equal(d + 1, d + p + 1, d + p + 2);
    case RepetitionKind::WeakSquare:
      return d[0] == d[2 * p + 1] && std::equal(d + 1, d + p + 1, d + p + 1);
  }
  return false;
}

Letter shift_letter(Letter l, int delta) {
  if (delta == 1) return static_cast<Letter>((l + 1) % 3);
  if (delta == -1) return static_cast<Letter>((l + 2) % 3);
  throw std::invalid_argument("shift delta must be +1 or -1");
}

Word shifted(const Word& w, int delta) {
  if (w.alphabet().size() != 3)
    throw std::invalid_argument("letter rotation is defined on the ternary alphabet only");
  LetterSeq out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(shift_letter(l, delta));
  return Word(std::move(out), w.alphabet());
}

namespace {
bool monotone(const Word& w, int delta) {
  if (w.alphabet().size() != 3)
    throw std::invalid_argument("increasing/decreasing is defined on the ternary alphabet only");
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] != shift_letter(w[i], delta)) return false;
  return true;
}
}  // namespace

bool is_increasing(const Word& w) { return monotone(w, +1); }
bool is_decreasing(const Word& w) { return monotone(w, -1); }

namespace {
void enumerate_rec(const Alphabet& alphabet, std::size_t length, KindMask avoid, bool all_lengths,
                   LetterSeq& buf, std::vector<Word>& out) {
  if (buf.size() == length) {
    if (!all_lengths) out.emplace_back(buf, alphabet);
    return;
  }
  const int k = alphabet.size();
  for (int c = 0; c < k; ++c) {
    buf.push_back(static_cast<Letter>(c));
    if (extension_clean({buf.data(), buf.size()}, avoid)) {
      if (all_lengths) out.emplace_back(buf, alphabet);
      enumerate_rec(alphabet, length, avoid, all_lengths, buf, out);
    }
    buf.pop_back();
  }
}
}  // namespace

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length, KindMask avoid) {
  std::vector<Word> out;
  LetterSeq buf;
  buf.reserve(length);
  if (length == 0) {
    out.emplace_back(LetterSeq{}, alphabet);
    return out;
  }
  enumerate_rec(alphabet, length, avoid, false, buf, out);
  return out;
}

std::vector<Word> enumerate_words_up_to(const Alphabet& alphabet, std::size_t max_length, KindMask avoid) {
  std::vector<Word> out;
  LetterSeq buf;
  buf.reserve(max_length);
  enumerate_rec(alphabet, max_length, avoid, true, buf, out);
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  });
  return out;
}

}  // namespace nrw
