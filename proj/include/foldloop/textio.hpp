#pragma once

#include <string>

#include <json.hpp>

#include "foldloop/band.hpp"
#include "foldloop/braid.hpp"
#include "foldloop/folds.hpp"

namespace foldloop {

/// Parse the word text format: an optional "m=<int>" prefix followed by
/// whitespace-separated nonzero integers, k > 0 meaning s_k with sign +1
/// and k < 0 meaning s_|k| with sign -1. Without the prefix the strand
/// count is inferred as 1 + max |k|.
/// Throws SyntaxError for malformed tokens, BoundsError when a letter
/// does not fit the declared strand count.
BraidWord parse_word(const std::string& text);

/// Canonical text form with an explicit m= prefix and single spaces.
/// parse_word(format_word(w)) == w.
std::string format_word(const BraidWord& word);

/// The analyze report: m, n, writhe, components, valid, required_twists,
/// lk (boundary linking number at t = 0), theorem_holds. The twist and
/// linking fields are null for multi-component words.
nlohmann::ordered_json report_json(const BraidWord& word);

nlohmann::ordered_json doubled_json(const FlatBand& band);
nlohmann::ordered_json search_json(const SearchSummary& summary);
nlohmann::ordered_json word_json(const BraidWord& word);

}  // namespace foldloop
