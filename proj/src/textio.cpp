#include "foldloop/textio.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace foldloop {

namespace {

int parse_int(const std::string& token, const std::string& what) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw SyntaxError("bad " + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

BraidWord parse_word(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> tokens;
  for (std::string token; stream >> token;) tokens.push_back(token);

  std::size_t first_letter = 0;
  int declared_strands = 0;
  if (!tokens.empty() && tokens[0].rfind("m=", 0) == 0) {
    declared_strands = parse_int(tokens[0].substr(2), "strand count");
    if (declared_strands < 1) {
      throw SyntaxError("strand count must be at least 1");
    }
    first_letter = 1;
  }

  std::vector<Generator> letters;
  int max_index = 0;
  for (std::size_t i = first_letter; i < tokens.size(); ++i) {
    const int k = parse_int(tokens[i], "letter");
    if (k == 0) throw SyntaxError("letter must be nonzero");
    letters.push_back({std::abs(k), k > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(k));
  }

  const int strands = declared_strands > 0 ? declared_strands : max_index + 1;
  if (max_index > strands - 1) {
    throw BoundsError("letter index " + std::to_string(max_index) +
                      " needs more than " + std::to_string(strands) +
                      " strands");
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& word) {
  std::string out = "m=" + std::to_string(word.strands());
  for (const Generator& g : word.letters()) {
    out += ' ';
    out += std::to_string(g.sign * g.index);
  }
  return out;
}

nlohmann::ordered_json report_json(const BraidWord& word) {
  const FoldReport report = fold_report(word);
  nlohmann::ordered_json out;
  out["m"] = report.m;
  out["n"] = report.n;
  out["writhe"] = report.writhe;
  out["components"] = report.components;
  out["valid"] = report.valid;
  if (report.components == 1) {
    out["required_twists"] = required_twists(word);
    out["lk"] = boundary_linking_number(FlatBand(word, 0));
  } else {
    out["required_twists"] = nullptr;
    out["lk"] = nullptr;
  }
  out["theorem_holds"] = check_theorem(word).theorem_holds;
  return out;
}

nlohmann::ordered_json doubled_json(const FlatBand& band) {
  const DoubledDiagram doubled = double_band(band);
  nlohmann::ordered_json out;
  out["core"] = format_word(band.core());
  out["twists"] = band.full_twists();
  out["word"] = format_word(doubled.word);
  out["left_component"] = doubled.left_component;
  out["right_component"] = doubled.right_component;
  out["lk"] = boundary_linking_number(band);
  return out;
}

nlohmann::ordered_json search_json(const SearchSummary& summary) {
  nlohmann::ordered_json out;
  out["m_max"] = summary.m_max;
  out["n_max"] = summary.n_max;
  out["per_m"] = nlohmann::ordered_json::array();
  for (const auto& [m, entry] : summary.per_m) {
    nlohmann::ordered_json row;
    row["m"] = m;
    row["fold_found"] = entry.fold_found;
    row["minimal_n"] =
        entry.minimal_n ? nlohmann::ordered_json(*entry.minimal_n) : nullptr;
    row["witness"] = entry.witness
                         ? nlohmann::ordered_json(format_word(*entry.witness))
                         : nullptr;
    out["per_m"].push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json word_json(const BraidWord& word) {
  nlohmann::ordered_json out;
  out["m"] = word.strands();
  out["n"] = word.length();
  out["word"] = format_word(word);
  return out;
}

}  // namespace foldloop
