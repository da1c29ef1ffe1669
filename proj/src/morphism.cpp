#include "nrw/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrw {

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.size())
    throw std::invalid_argument("need exactly one image per letter");
  for (const Word& img : images_) {
    if (img.empty()) throw std::invalid_argument("empty image (morphism must be non-erasing)");
    if (!(img.alphabet() == alphabet_))
      throw std::invalid_argument("image over a different alphabet");
  }
}

Word Morphism::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw std::invalid_argument("word over a different alphabet");
  std::size_t total = 0;
  for (Letter l : w.letters()) total += images_[l].size();
  LetterSeq out;
  out.reserve(total);
  for (Letter l : w.letters()) {
    const LetterSeq& img = images_[l].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), alphabet_);
}

std::optional<std::size_t> Morphism::uniform_rank() const {
  const std::size_t r = images_[0].size();
  for (const Word& img : images_)
    if (img.size() != r) return std::nullopt;
  return r;
}

bool is_cyclic(const Morphism& m) {
  if (m.alphabet().size() != 3)
    throw std::invalid_argument("cyclic is defined for ternary morphisms only");
  return m.image(1) == shifted(m.image(0), +1) && m.image(2) == shifted(m.image(1), +1);
}

std::vector<Letter> fixed_point_seeds(const Morphism& m) {
  std::vector<Letter> seeds;
  for (int u = 0; u < m.alphabet().size(); ++u) {
    const Word& img = m.image(static_cast<Letter>(u));
    if (img.size() >= 2 && img[0] == u) seeds.push_back(static_cast<Letter>(u));
  }
  return seeds;
}

Word FragmentDecomposition::fragment(std::size_t i) const {
  const std::size_t lo = i == 0 ? 0 : boundaries[i - 1];
  const std::size_t hi = boundaries[i];
  LetterSeq s(image.letters().begin() + lo, image.letters().begin() + hi);
  return Word(std::move(s), image.alphabet());
}

FragmentDecomposition canonical_fragments(const Morphism& m, const Word& w) {
  FragmentDecomposition d{w, m.apply(w), {}};
  d.boundaries.reserve(w.size());
  std::size_t pos = 0;
  for (Letter l : w.letters()) {
    pos += m.image(l).size();
    d.boundaries.push_back(pos);
  }
  return d;
}

FixedPointStream::FixedPointStream(Morphism m, Letter seed)
    : morphism_(std::move(m)), seed_(seed) {
  const auto seeds = fixed_point_seeds(morphism_);
  if (std::find(seeds.begin(), seeds.end(), seed) == seeds.end())
    throw std::invalid_argument("letter is not a fixed-point seed of this morphism");
  buf_.push_back(seed_);
}

std::span<const Letter> FixedPointStream::extend_to(std::size_t min_len) {
  while (buf_.size() < min_len) {
    const Word next = morphism_.apply(Word(buf_, morphism_.alphabet()));
    if (next.size() <= buf_.size() ||
        !std::equal(buf_.begin(), buf_.end(), next.letters().begin()))
      throw std::logic_error("prefix stability violated while iterating the morphism");
    buf_ = next.letters();
  }
  return prefix();
}

Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t min_len) {
  FixedPointStream s(m, seed);
  s.extend_to(min_len);
  return s.prefix_word();
}

}  // namespace nrw
