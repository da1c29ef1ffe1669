#include "nrw/fixtures.hpp"

#include <stdexcept>

#include "nrw/io.hpp"

namespace nrw::fixtures {

namespace {

struct Entry {
  Info info;
  std::string_view content;
  std::uint64_t checksum;  // FNV-1a of content, pinned at repo creation
};

constexpr std::string_view kThueMorse =
    "1 -> 10\n"
    "0 -> 01\n";
constexpr std::string_view kThue1912 =
    "1 -> 12312\n"
    "2 -> 131232\n"
    "3 -> 1323132\n";
constexpr std::string_view kLeech =
    "1 -> 1232132312321\n"
    "2 -> 2313213123132\n"
    "3 -> 3121321231213\n";
constexpr std::string_view kRank5 =
    "1 -> 12321\n"
    "2 -> 23132\n"
    "3 -> 31213\n";
constexpr std::string_view kRank4 =
    "1 -> 1221\n"
    "2 -> 2332\n"
    "3 -> 3113\n";
constexpr std::string_view kRank3 =
    "1 -> 121\n"
    "2 -> 232\n"
    "3 -> 313\n";
constexpr std::string_view kPhi1Rank11 =
    "1 -> 12131232123\n"
    "2 -> 13212321323\n"
    "3 -> 13213121323\n";
constexpr std::string_view kPhi2Rank11 =
    "1 -> 12313231213\n"
    "2 -> 12321231213\n"
    "3 -> 23132123213\n";
constexpr std::string_view kWord718 =
    "abcbacbcacbacabcbacbcacbabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbabcbacbcabcbacabcacbcabcbabcacbacabcbacbcacbacabcbabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbabcacbcabcbacbcacbacabcbabcacbcabcbacabcacbcabcbabcacbacabcbacbcacbacabcbabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbabcacbcabcbacbcacbacabcacbcabcbacbcacbabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbabcbacbcabcbacabcacbcabcbabcacbacabcbacbcacbacabcbabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbabcacbcabcbacbcacbacabcbabcacbcabcbacabcacbcabcbabcacbacabcbacbcacbacabcbabcacbcabcbacbcacbacabcbacbcabcbacabcacbcabcbacbcacbacabcbacbcabcbabcacbcabcbaca\n";
constexpr std::string_view kCensusRank11 =
    "phi(1) phi(2) phi(3)\n"
    "12131232123 13212321323 13213121323\n"
    "12131232123 13213121323 13212321323\n"
    "12132123213 12132313213 12321231323\n"
    "12132123213 12321231323 12132313213\n"
    "12132313213 12132123213 12321231323\n"
    "12132313213 12321231323 12132123213\n"
    "12312131232 12313231232 13121323132\n"
    "12312131232 13121323132 12313231232\n"
    "12313231213 12321231213 23132123213\n"
    "12313231213 12321312132 12321323132\n"
    "12313231213 12321323132 12321312132\n"
    "12313231213 23132123213 12321231213\n"
    "12313231232 12312131232 13121323132\n"
    "12313231232 13121323132 12312131232\n"
    "12321231213 12313231213 23132123213\n"
    "12321231213 23132123213 12313231213\n"
    "12321231323 12132123213 12132313213\n"
    "12321231323 12132313213 12132123213\n"
    "12321312132 12313231213 12321323132\n"
    "12321312132 12321323132 12313231213\n"
    "12321312132 31213123132 31232123132\n"
    "12321312132 31232123132 31213123132\n"
    "12321323132 12313231213 12321312132\n"
    "12321323132 12321312132 12313231213\n"
    "13121323132 12312131232 12313231232\n"
    "13121323132 12313231232 12312131232\n"
    "13123132312 13123212312 13231321232\n"
    "13123132312 13231321232 13123212312\n"
    "13123212312 13123132312 13231321232\n"
    "13123212312 13231321232 13123132312\n"
    "13212321312 13231213123 13231232123\n"
    "13212321312 13231232123 13231213123\n"
    "13212321312 13231321312 32123132312\n"
    "13212321312 32123132312 13231321312\n"
    "13212321323 12131232123 13213121323\n"
    "13212321323 13213121323 12131232123\n"
    "13213121323 12131232123 13212321323\n"
    "13213121323 13212321323 12131232123\n"
    "13231213123 13212321312 13231232123\n"
    "13231213123 13231232123 13212321312\n"
    "13231213123 21312132123 21323132123\n"
    "13231213123 21323132123 21312132123\n"
    "13231232123 13212321312 13231213123\n"
    "13231232123 13231213123 13212321312\n"
    "13231321232 13123132312 13123212312\n"
    "13231321232 13123212312 13123132312\n"
    "13231321312 13212321312 32123132312\n"
    "13231321312 32123132312 13212321312\n"
    "21231213123 21231323123 21312132313\n"
    "21231213123 21312132313 21231323123\n"
    "21231323123 21231213123 21312132313\n"
    "21231323123 21312132313 21231213123\n"
    "21232131213 23121312313 23123212313\n"
    "21232131213 23123212313 23121312313\n"
    "21312132123 13231213123 21323132123\n"
    "21312132123 21323132123 13231213123\n"
    "21312132313 21231213123 21231323123\n"
    "21312132313 21231323123 21231213123\n"
    "21312313231 21312321231 21323132123\n"
    "21312313231 21323132123 21312321231\n"
    "21312321231 21312313231 21323132123\n"
    "21312321231 21323132123 21312313231\n"
    "21312321231 32123213231 32131213231\n"
    "21312321231 32131213231 32123213231\n"
    "21321232131 21323132131 23212313231\n"
    "21321232131 23212313231 21323132131\n"
    "21323132123 13231213123 21312132123\n"
    "21323132123 21312132123 13231213123\n"
    "21323132123 21312313231 21312321231\n"
    "21323132123 21312321231 21312313231\n"
    "21323132131 21321232131 23212313231\n"
    "21323132131 23212313231 21321232131\n"
    "23121312313 21232131213 23123212313\n"
    "23121312313 23123212313 21232131213\n"
    "23121312321 23132123213 23132131213\n"
    "23121312321 23132131213 23132123213\n"
    "23121312321 23132312321 31213231321\n"
    "23121312321 31213231321 23132312321\n"
    "23123212313 21232131213 23121312313\n"
    "23123212313 23121312313 21232131213\n"
    "23132123213 12313231213 12321231213\n"
    "23132123213 12321231213 12313231213\n"
    "23132123213 23121312321 23132131213\n"
    "23132123213 23132131213 23121312321\n"
    "23132131213 23121312321 23132123213\n"
    "23132131213 23132123213 23121312321\n"
    "23132312131 23213121321 23213231321\n"
    "23132312131 23213231321 23213121321\n"
    "23132312321 23121312321 31213231321\n"
    "23132312321 31213231321 23121312321\n"
    "23212313231 21321232131 21323132131\n"
    "23212313231 21323132131 21321232131\n"
    "23213121321 23132312131 23213231321\n"
    "23213121321 23213231321 23132312131\n"
    "23213231321 23132312131 23213121321\n"
    "23213231321 23213121321 23132312131\n"
    "31213123132 12321312132 31232123132\n"
    "31213123132 31232123132 12321312132\n"
    "31213123212 31321232132 31321312132\n"
    "31213123212 31321312132 31321232132\n"
    "31213212321 31213231321 31232123132\n"
    "31213212321 31232123132 31213231321\n"
    "31213231321 23121312321 23132312321\n"
    "31213231321 23132312321 23121312321\n"
    "31213231321 31213212321 31232123132\n"
    "31213231321 31232123132 31213212321\n"
    "31231323121 31232123121 32313212321\n"
    "31231323121 32313212321 31232123121\n"
    "31232123121 31231323121 32313212321\n"
    "31232123121 32313212321 31231323121\n"
    "31232123132 12321312132 31213123132\n"
    "31232123132 31213123132 12321312132\n"
    "31232123132 31213212321 31213231321\n"
    "31232123132 31213231321 31213212321\n"
    "31321232132 31213123212 31321312132\n"
    "31321232132 31321312132 31213123212\n"
    "31321312132 31213123212 31321232132\n"
    "31321312132 31321232132 31213123212\n"
    "31323121312 32131213212 32132313212\n"
    "31323121312 32132313212 32131213212\n"
    "32123121312 32123132312 32131213231\n"
    "32123121312 32131213231 32123132312\n"
    "32123132312 13212321312 13231321312\n"
    "32123132312 13231321312 13212321312\n"
    "32123132312 32123121312 32131213231\n"
    "32123132312 32131213231 32123121312\n"
    "32123213121 32312131231 32312321231\n"
    "32123213121 32312321231 32312131231\n"
    "32123213231 21312321231 32131213231\n"
    "32123213231 32131213231 21312321231\n"
    "32131213212 31323121312 32132313212\n"
    "32131213212 32132313212 31323121312\n"
    "32131213231 21312321231 32123213231\n"
    "32131213231 32123121312 32123132312\n"
    "32131213231 32123132312 32123121312\n"
    "32131213231 32123213231 21312321231\n"
    "32132313212 31323121312 32131213212\n"
    "32132313212 32131213212 31323121312\n"
    "32312131231 32123213121 32312321231\n"
    "32312131231 32312321231 32123213121\n"
    "32312321231 32123213121 32312131231\n"
    "32312321231 32312131231 32123213121\n"
    "32313212321 31231323121 31232123121\n"
    "32313212321 31232123121 31231323121\n";

const Entry kEntries[] = {
    {{"thue-morse", Kind::MorphismText, "binary morphism of the Thue-Morse sequence"}, kThueMorse, 0xbab69e5096a4810eull},
    {{"thue-1912", Kind::MorphismText, "non-uniform ternary morphism generating an infinite squarefree word"}, kThue1912, 0x0988a87a8b1a0eb2ull},
    {{"leech", Kind::MorphismText, "rank-13 uniform squarefree morphism"}, kLeech, 0x6da54612882cfc7cull},
    {{"rank5", Kind::MorphismText, "rank-5 cyclic morphism, cubefree and weakly squarefree"}, kRank5, 0x55e19e444f9cc9d4ull},
    {{"rank4", Kind::MorphismText, "rank-4 Thue morphism"}, kRank4, 0x0df64397861628b8ull},
    {{"rank3", Kind::MorphismText, "rank-3 cubefree morphism with a fixed point"}, kRank3, 0x59bdf9413556c160ull},
    {{"phi1-rank11", Kind::MorphismText, "orbit representative of the rank-11 squarefree census"}, kPhi1Rank11, 0xc997a12e31d7fcc6ull},
    {{"phi2-rank11", Kind::MorphismText, "orbit representative of the rank-11 squarefree census"}, kPhi2Rank11, 0xb5836168d5e89be8ull},
    {{"word718", Kind::WordText, "squarefree 718-letter word over {a,b,c}"}, kWord718, 0xedbea75e52b9f09bull},
    {{"census-rank11", Kind::CensusTable, "all 144 uniform squarefree morphisms of rank 11"}, kCensusRank11, 0xfc5d64d51f849e5full},
};

const Entry& find(std::string_view name) {
  for (const Entry& e : kEntries)
    if (e.info.name == name) return e;
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

}  // namespace

std::vector<Info> list() {
  std::vector<Info> v;
  for (const Entry& e : kEntries) v.push_back(e.info);
  return v;
}

std::string text(std::string_view name) {
  const Entry& e = find(name);
  if (io::fnv1a64(e.content) != e.checksum)
    throw std::runtime_error("fixture checksum mismatch: " + std::string(name));
  return std::string(e.content);
}

Word word(std::string_view name) {
  const Entry& e = find(name);
  if (e.info.kind != Kind::WordText)
    throw std::invalid_argument("fixture is not a word: " + std::string(name));
  std::string t = text(name);
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
  return io::parse_word(t);
}

Morphism morphism(std::string_view name) {
  const Entry& e = find(name);
  if (e.info.kind != Kind::MorphismText)
    throw std::invalid_argument("fixture is not a morphism: " + std::string(name));
  return io::parse_morphism(text(name));
}

std::string census_table(std::string_view name) {
  const Entry& e = find(name);
  if (e.info.kind != Kind::CensusTable)
    throw std::invalid_argument("fixture is not a census table: " + std::string(name));
  return text(name);
}

}  // namespace nrw::fixtures
