#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nrw/morphism.hpp"
#include "nrw/word.hpp"

namespace nrw::fixtures {

enum class Kind { WordText, MorphismText, CensusTable };

struct Info {
  std::string_view name;
  Kind kind;
  std::string_view note;
};

std::vector<Info> list();

// Raw fixture text, validated against its pinned FNV-1a checksum.
// Throws on unknown names and on checksum drift.
std::string text(std::string_view name);

Word word(std::string_view name);
Morphism morphism(std::string_view name);
std::string census_table(std::string_view name);

}  // namespace nrw::fixtures
