#include "nrw/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace nrw {

namespace {

constexpr std::size_t kSampleCap = 32;

int effective_threads(const SearchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Splits [0, n) into chunks and runs fn(chunk_index, begin, end) on a pool of
// async tasks. Results are merged by the caller in chunk order, which keeps
// every search deterministic regardless of thread count.
template <class Fn>
void parallel_ranges(std::size_t n, int threads, std::size_t chunks, Fn&& fn) {
  if (threads <= 1 || n < 2 * chunks || chunks <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::future<void>> futs;
  const std::size_t per = (n + chunks - 1) / chunks;
  for (std::size_t c = 0, lo = 0; lo < n; ++c, lo += per)
    futs.push_back(std::async(std::launch::async, [=, &fn] { fn(c, lo, std::min(lo + per, n)); }));
  for (auto& f : futs) f.get();
}

bool squarefree_span(const Letter* d, std::size_t n) {
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = n - p; j-- > 0;) {
      run = (d[j] == d[j + p]) ? run + 1 : 0;
      if (run >= p) return false;
    }
  }
  return true;
}

// The 12 squarefree ternary words of length 3, lexicographic, 0-based.
constexpr std::array<std::array<Letter, 3>, 12> kSquarefreeTriples = {{
    {0, 1, 0}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}, {1, 0, 1}, {1, 0, 2},
    {1, 2, 0}, {1, 2, 1}, {2, 0, 1}, {2, 0, 2}, {2, 1, 0}, {2, 1, 2},
}};

struct FlatPool {
  std::size_t rank = 0;
  std::size_t count = 0;
  std::vector<Letter> flat;  // count * rank letters

  const Letter* word(std::size_t i) const { return flat.data() + i * rank; }
};

FlatPool flatten(const std::vector<Word>& words, std::size_t rank) {
  FlatPool p{rank, words.size(), {}};
  p.flat.reserve(words.size() * rank);
  for (const Word& w : words)
    p.flat.insert(p.flat.end(), w.letters().begin(), w.letters().end());
  return p;
}

// Crochemore uniform test on an image triple, early exit on the first dirty
// test image.
bool k3_squarefree(const FlatPool& pool, std::size_t q, std::size_t w, std::size_t e,
                   std::vector<Letter>& buf) {
  const std::size_t r = pool.rank;
  const Letter* img[3] = {pool.word(q), pool.word(w), pool.word(e)};
  buf.resize(3 * r);
  for (const auto& t : kSquarefreeTriples) {
    Letter* out = buf.data();
    for (Letter l : t) {
      std::copy(img[l], img[l] + r, out);
      out += r;
    }
    if (!squarefree_span(buf.data(), 3 * r)) return false;
  }
  return true;
}

Morphism make_morphism(const FlatPool& pool, std::size_t q, std::size_t w, std::size_t e) {
  const Alphabet a = Alphabet::ternary();
  auto word_of = [&](std::size_t i) {
    return Word(LetterSeq(pool.word(i), pool.word(i) + pool.rank), a);
  };
  return Morphism(a, {word_of(q), word_of(w), word_of(e)});
}

void sort_survivors(std::vector<Morphism>& v) {
  std::sort(v.begin(), v.end(), [](const Morphism& a, const Morphism& b) {
    return serialize_morphism(a) < serialize_morphism(b);
  });
}

}  // namespace

MorphismTransform identity_transform() { return MorphismTransform{{0, 1, 2}, {0, 1, 2}, false}; }

std::vector<MorphismTransform> symmetry_transforms() {
  std::vector<MorphismTransform> out;
  out.reserve(72);
  std::array<Letter, 3> p1 = {0, 1, 2};
  do {
    std::array<Letter, 3> p2 = {0, 1, 2};
    do {
      out.push_back({p1, p2, false});
      out.push_back({p1, p2, true});
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  return out;
}

Morphism transformed(const Morphism& m, const MorphismTransform& t) {
  if (m.alphabet().size() != 3)
    throw std::invalid_argument("symmetry transforms act on ternary morphisms");
  std::vector<Word> images;
  images.reserve(3);
  for (Letter a = 0; a < 3; ++a) {
    const Word& src = m.image(t.select[a]);
    LetterSeq s;
    s.reserve(src.size());
    for (Letter l : src.letters()) s.push_back(t.rename[l]);
    if (t.mirror) std::reverse(s.begin(), s.end());
    images.emplace_back(std::move(s), m.alphabet());
  }
  return Morphism(m.alphabet(), std::move(images));
}

std::string serialize_morphism(const Morphism& m) {
  std::string s;
  for (int a = 0; a < m.alphabet().size(); ++a) {
    if (a) s += '|';
    for (Letter l : m.image(static_cast<Letter>(a)).letters()) s += static_cast<char>('1' + l);
  }
  return s;
}

std::string canonical_form(const Morphism& m, std::span<const MorphismTransform> group) {
  std::string best;
  for (const MorphismTransform& t : group) {
    std::string s = serialize_morphism(transformed(m, t));
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<OrbitClass> orbit_reduce(const std::vector<Morphism>& morphisms,
                                     std::span<const MorphismTransform> group) {
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    index_of.emplace(serialize_morphism(morphisms[i]), i);

  std::vector<bool> visited(morphisms.size(), false);
  std::vector<OrbitClass> classes;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (visited[i]) continue;
    std::set<std::string> orbit;
    for (const MorphismTransform& t : group)
      orbit.insert(serialize_morphism(transformed(morphisms[i], t)));

    OrbitClass cls{morphisms[i], 0, 0};
    std::string best;
    for (const std::string& s : orbit) {
      auto it = index_of.find(s);
      if (it == index_of.end()) {
        ++cls.outside;
        continue;
      }
      visited[it->second] = true;
      ++cls.size;
      if (best.empty() || s < best) {
        best = s;
        cls.representative = morphisms[it->second];
      }
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const OrbitClass& a, const OrbitClass& b) {
    return serialize_morphism(a.representative) < serialize_morphism(b.representative);
  });
  return classes;
}

SearchReport search_uniform_squarefree(int rank, const SearchConfig& cfg) {
  if (rank < 2 || rank > 13) throw std::invalid_argument("rank must be in 2..13");
  const auto t0 = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.kind = "uniform-squarefree";
  rep.rank = rank;

  const auto pool_words = enumerate_words(Alphabet::ternary(), rank, kSquarefree);
  const FlatPool pool = flatten(pool_words, rank);
  const std::size_t n = pool.count;
  rep.pool_size = n;

  const int threads = effective_threads(cfg);
  std::vector<std::vector<Morphism>> found(threads * 4 + 1);

  if (cfg.prune) {
    // pair_ok[a*n+b]: the images of the 2-letter squarefree preimage "ab"
    // concatenate to a squarefree word. Necessary for any survivor since
    // phi(ab) is a factor of phi(xab) for each test triple.
    std::vector<std::uint8_t> pair_ok(n * n, 0);
    parallel_ranges(n, threads, found.size(), [&](std::size_t, std::size_t lo, std::size_t hi) {
      std::vector<Letter> buf(2 * rank);
      for (std::size_t a = lo; a < hi; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::copy(pool.word(a), pool.word(a) + rank, buf.data());
          std::copy(pool.word(b), pool.word(b) + rank, buf.data() + rank);
          pair_ok[a * n + b] = squarefree_span(buf.data(), 2 * rank) ? 1 : 0;
        }
    });
    parallel_ranges(n, threads, found.size(), [&](std::size_t c, std::size_t lo, std::size_t hi) {
      std::vector<Letter> buf;
      for (std::size_t q = lo; q < hi; ++q)
        for (std::size_t w = 0; w < n; ++w) {
          if (!pair_ok[q * n + w] || !pair_ok[w * n + q]) continue;
          for (std::size_t e = 0; e < n; ++e) {
            if (!pair_ok[q * n + e] || !pair_ok[e * n + q] || !pair_ok[w * n + e] ||
                !pair_ok[e * n + w])
              continue;
            if (k3_squarefree(pool, q, w, e, buf)) found[c].push_back(make_morphism(pool, q, w, e));
          }
        }
    });
  } else {
    parallel_ranges(n, threads, found.size(), [&](std::size_t c, std::size_t lo, std::size_t hi) {
      std::vector<Letter> buf;
      for (std::size_t q = lo; q < hi; ++q)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t e = 0; e < n; ++e)
            if (k3_squarefree(pool, q, w, e, buf)) found[c].push_back(make_morphism(pool, q, w, e));
    });
  }

  for (auto& part : found)
    rep.survivors.insert(rep.survivors.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  sort_survivors(rep.survivors);
  rep.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

SearchReport search_cyclic_squarefree(int rank, const SearchConfig& cfg) {
  if (rank < 2 || rank > 13) throw std::invalid_argument("rank must be in 2..13");
  const auto t0 = std::chrono::steady_clock::now();
  (void)cfg;

  SearchReport rep;
  rep.kind = "cyclic-squarefree";
  rep.rank = rank;

  const auto pool_words = enumerate_words(Alphabet::ternary(), rank, kSquarefree);
  rep.pool_size = pool_words.size();
  for (const Word& u : pool_words) {
    const Word v = shifted(u, +1);
    const Word w = shifted(v, +1);
    const Morphism m(Alphabet::ternary(), {u, v, w});
    if (decide_squarefree(m).verdict == Verdict::ProvenTrue) rep.survivors.push_back(m);
  }
  sort_survivors(rep.survivors);
  rep.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

namespace {

// Turns a failed structural edge condition into a concrete refutation, per
// the overlap/cube/weak-square constructions those conditions come from.
// Preconditions follow the check order: the cube construction relies on all
// edge letters being distinct (checked first), the weak-square one on
// distinct first letters.
std::optional<PropertyDecision> structural_refutation(const Morphism& m) {
  const int k = m.alphabet().size();
  const auto first = [&](int a) { return m.image(static_cast<Letter>(a))[0]; };
  const auto last = [&](int a) {
    const Word& w = m.image(static_cast<Letter>(a));
    return w[w.size() - 1];
  };
  const auto refute = [&](PropertyKind p, LetterSeq pre) -> std::optional<PropertyDecision> {
    const Word preimage(std::move(pre), m.alphabet());
    const Word image = m.apply(preimage);
    auto wit = find_repetition(image.span(), repetition_kind_of(p));
    if (!wit) return std::nullopt;
    return PropertyDecision{p, Verdict::RefutedBy, {}, Refutation{preimage, *wit}, 0, 0};
  };

  // Shared first letters: phi(aab) contains an overlap; shared lasts: phi(abb).
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (first(a) == first(b))
        return refute(PropertyKind::OverlapFree,
                      {static_cast<Letter>(a), static_cast<Letter>(a), static_cast<Letter>(b)});
      if (last(a) == last(b))
        return refute(PropertyKind::OverlapFree,
                      {static_cast<Letter>(a), static_cast<Letter>(b), static_cast<Letter>(b)});
    }
  // Equal edge pair inside an image: a cube straddles the junction with the
  // neighbour whose image ends (starts) with that letter.
  for (int a = 0; a < k; ++a) {
    const Word& w = m.image(static_cast<Letter>(a));
    if (w.size() >= 2 && w[0] == w[1]) {
      for (int b = 0; b < k; ++b)
        if (last(b) == w[0])
          return refute(PropertyKind::Cubefree, {static_cast<Letter>(b), static_cast<Letter>(a)});
    }
    if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) {
      for (int b = 0; b < k; ++b)
        if (first(b) == w[w.size() - 1])
          return refute(PropertyKind::Cubefree, {static_cast<Letter>(a), static_cast<Letter>(b)});
    }
  }
  // Image with distinct edge letters: phi(ab) has the weak square yy where
  // phi(b) starts with the last letter of phi(a).
  for (int a = 0; a < k; ++a) {
    if (first(a) != last(a)) {
      for (int b = 0; b < k; ++b)
        if (b != a && first(b) == last(a))
          return refute(PropertyKind::WeaklySquarefree,
                        {static_cast<Letter>(a), static_cast<Letter>(b)});
    }
  }
  return std::nullopt;
}

}  // namespace

SearchReport search_weakly_squarefree_thue(int rank, const Alphabet& alphabet,
                                           const SearchConfig& cfg) {
  if (rank < 2 || rank > 6) throw std::invalid_argument("rank must be in 2..6");
  const int k = alphabet.size();
  if (k != 2 && k != 3)
    throw std::invalid_argument("sweep supports the binary and ternary alphabets");
  const auto t0 = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.kind = "weakly-squarefree-thue";
  rep.rank = rank;
  rep.alphabet = alphabet;

  const auto all = enumerate_words(alphabet, rank, kAvoidNone);
  const std::size_t n = all.size();

  // Seeded pool size: triples/pairs where some image starts with its letter.
  std::uint64_t no_seed = 1, total = 1;
  const std::uint64_t starts_with = n / k;  // words with a fixed first letter
  for (int i = 0; i < k; ++i) {
    total *= n;
    no_seed *= n - starts_with;
  }
  rep.pool_size = total - no_seed;

  const auto cube_pre = enumerate_words_up_to(alphabet, cfg.test_len, kCubefree);
  const auto ov_pre = enumerate_words_up_to(alphabet, cfg.test_len, kOverlapFree);
  const auto weak_pre = enumerate_words_up_to(alphabet, cfg.test_len, kWeaklySquarefree);

  std::vector<std::size_t> idx(k, 0);
  std::vector<Word> images(k, all[0]);
  while (true) {
    bool seeded = false;
    for (int i = 0; i < k; ++i)
      if (all[idx[i]][0] == i) seeded = true;
    if (seeded) {
      for (int i = 0; i < k; ++i) images[i] = all[idx[i]];
      const Morphism m(alphabet, images);

      std::optional<PropertyDecision> refutation = structural_refutation(m);
      if (!refutation) {
        for (auto [prop, pre] : {std::pair{PropertyKind::Cubefree, &cube_pre},
                                 std::pair{PropertyKind::OverlapFree, &ov_pre},
                                 std::pair{PropertyKind::WeaklySquarefree, &weak_pre}}) {
          if (auto r = refute_over(m, repetition_kind_of(prop), *pre)) {
            refutation = PropertyDecision{prop, Verdict::RefutedBy, {}, std::move(r), 0, 0};
            break;
          }
        }
      }
      if (!refutation) {
        for (PropertyKind prop :
             {PropertyKind::Cubefree, PropertyKind::OverlapFree, PropertyKind::WeaklySquarefree}) {
          PropertyDecision d = check_bounded(m, prop, 1, cfg.prefix_len);
          if (d.refuted()) {
            refutation = std::move(d);
            break;
          }
        }
      }

      if (refutation) {
        ++rep.refuted_count;
        if (validate_decision(m, *refutation)) ++rep.refutations_validated;
        rep.max_refutation_preimage =
            std::max(rep.max_refutation_preimage, refutation->refutation->preimage.size());
        if (rep.refutation_samples.size() < kSampleCap)
          rep.refutation_samples.push_back({m, *refutation});
      } else {
        rep.survivors.push_back(m);
      }
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }

  sort_survivors(rep.survivors);
  rep.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

SearchReport search_triple_property(int rank, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep = search_uniform_squarefree(rank, cfg);
  rep.kind = "squarefree-cubefree-overlapfree";

  const auto cube_pre = enumerate_words_up_to(Alphabet::ternary(), cfg.test_len, kCubefree);
  const auto ov_pre = enumerate_words_up_to(Alphabet::ternary(), cfg.test_len, kOverlapFree);

  std::vector<Morphism> keep;
  for (const Morphism& m : rep.survivors) {
    std::optional<PropertyDecision> refutation;
    if (auto r = refute_over(m, RepetitionKind::Cube, cube_pre))
      refutation =
          PropertyDecision{PropertyKind::Cubefree, Verdict::RefutedBy, {}, std::move(r), 0, 0};
    else if (auto r2 = refute_over(m, RepetitionKind::Overlap, ov_pre))
      refutation =
          PropertyDecision{PropertyKind::OverlapFree, Verdict::RefutedBy, {}, std::move(r2), 0, 0};
    else {
      for (PropertyKind prop : {PropertyKind::Cubefree, PropertyKind::OverlapFree}) {
        PropertyDecision d = check_bounded(m, prop, 1, cfg.prefix_len);
        if (d.refuted()) {
          refutation = std::move(d);
          break;
        }
      }
    }
    if (refutation) {
      ++rep.refuted_count;
      if (validate_decision(m, *refutation)) ++rep.refutations_validated;
      rep.max_refutation_preimage =
          std::max(rep.max_refutation_preimage, refutation->refutation->preimage.size());
      if (rep.refutation_samples.size() < kSampleCap)
        rep.refutation_samples.push_back({m, *refutation});
    } else {
      keep.push_back(m);
    }
  }
  rep.survivors = std::move(keep);
  rep.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

}  // namespace nrw
