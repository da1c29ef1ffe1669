#include "oracle/oracle.hpp"

namespace nrw::oracle {

namespace {

bool block_eq(std::span<const Letter> w, std::size_t a, std::size_t b, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t)
    if (w[a + t] != w[b + t]) return false;
  return true;
}

}  // namespace

std::optional<RepetitionWitness> find_naive(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  switch (kind) {
    case RepetitionKind::Square:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 2 * p <= n; ++p)
          if (block_eq(w, i, i + p, p))
            return RepetitionWitness{kind, i + 1, p, 2 * p};
      break;
    case RepetitionKind::Cube:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 3 * p <= n; ++p)
          if (block_eq(w, i, i + p, p) && block_eq(w, i + p, i + 2 * p, p))
            return RepetitionWitness{kind, i + 1, p, 3 * p};
      break;
    case RepetitionKind::Overlap:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; i + 2 * p + 3 <= n; ++p)
          if (w[i] == w[i + p + 1] && w[i] == w[i + 2 * p + 2] &&
              block_eq(w, i + 1, i + p + 2, p))
            return RepetitionWitness{kind, i + 1, p, 2 * p + 3};
      break;
    case RepetitionKind::WeakSquare:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; i + 2 * p + 2 <= n; ++p)
          if (w[i] == w[i + 2 * p + 1] && block_eq(w, i + 1, i + p + 1, p))
            return RepetitionWitness{kind, i + 1, p, 2 * p + 2};
      break;
  }
  return std::nullopt;
}

std::vector<Word> enumerate_filtered(const Alphabet& alphabet, std::size_t length, KindMask avoid) {
  std::vector<Word> out;
  const int k = alphabet.size();
  LetterSeq buf(length, 0);
  while (true) {
    bool ok = true;
    for (RepetitionKind kind : {RepetitionKind::Square, RepetitionKind::Cube,
                                RepetitionKind::Overlap, RepetitionKind::WeakSquare})
      if ((avoid & kind_bit(kind)) && find_naive({buf.data(), buf.size()}, kind)) ok = false;
    if (ok) out.emplace_back(buf, alphabet);
    std::size_t pos = length;
    while (pos > 0 && buf[pos - 1] == k - 1) buf[--pos] = 0;
    if (pos == 0) break;
    ++buf[pos - 1];
  }
  return out;
}

}  // namespace nrw::oracle
