#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nrw/avoid.hpp"
#include "nrw/classify.hpp"
#include "nrw/search.hpp"

namespace nrw::io {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Which rendering a piece of text uses: letters if any 'a'..'z' appears,
// zero-based digits if '0' appears, one-based digits otherwise.
Style infer_style(std::string_view text);

std::optional<Letter> parse_letter(char c, Style style);

// Parses a word. Without an explicit alphabet the style is inferred and the
// alphabet sized to the largest letter used.
Word parse_word(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

std::string render_word(const Word& w);               // uses the word's own style
std::string render_word(const Word& w, Style style);

// Morphism text: one line per letter, "<letter> -> <word>". The alphabet is
// inferred from the left-hand letters, which must be exactly the first k
// symbols of one style.
Morphism parse_morphism(std::string_view text);
std::string render_morphism(const Morphism& m);

std::string to_string(PropertyKind p);
std::string to_string(RepetitionKind k);
std::string to_string(Verdict v);

// Canonical census table: header row then one "phi(1) phi(2) phi(3)" line
// per survivor in serialization order. Byte-stable across runs and thread
// counts; golden files diff against this exact form.
std::string emit_census_table(const SearchReport& report);

ordered_json witness_json(const RepetitionWitness& w);
ordered_json decision_json(const PropertyDecision& d);
ordered_json morphism_json(const Morphism& m);
ordered_json report_json(const MorphismReport& rep);
ordered_json search_json(const SearchReport& rep, bool include_timings = false);
ordered_json avoidance_json(const AvoidanceOutcome& out);
ordered_json verify_json(const VerifyResult& res);
ordered_json prefix_check_json(const PrefixCheckReport& rep);

// FNV-1a, used to pin fixture content.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace nrw::io
