#pragma once

#include <functional>
#include <map>
#include <optional>

#include "foldloop/braid.hpp"

namespace foldloop {

/// Per-fold summary; every field agrees with direct recomputation on word.
struct FoldReport {
  int m;
  int n;
  int writhe;
  int components;
  bool valid;
  BraidWord word;
};

FoldReport fold_report(const BraidWord& word);

struct SearchEntry {
  bool fold_found = false;
  std::optional<int> minimal_n;
  std::optional<BraidWord> witness;  // lexicographically least at minimal n
  friend bool operator==(const SearchEntry&, const SearchEntry&) = default;
};

struct SearchSummary {
  std::map<int, SearchEntry> per_m;
  int m_max;
  int n_max;
  friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

/// The alternating fold [s1+, s2-, ..., s_{m-1}] on an odd number of
/// loops; empty for m = 1 (the open shade).
/// Throws EvenLoopCount for even m.
BraidWord make_fold(int loops);

/// Thread the inner fold through the last loop of the outer fold:
/// concatenate outer with inner shifted up by m_outer - 1. Loop counts
/// add minus one, writhes add to zero.
/// Throws InvalidFold unless both arguments pass is_valid_fold.
BraidWord nest(const BraidWord& outer, const BraidWord& inner);

/// Visit all (2(m-1))^n words of length n on m strands exactly once, in
/// lexicographic order (index ascending, + before -). The visitor returns
/// false to stop early; the function returns false iff stopped.
bool enumerate_words(int strands, int length,
                     const std::function<bool(const BraidWord&)>& visit);

/// For each m <= m_max, scan n = 0..n_max for the first length admitting
/// a valid fold and its lexicographically least witness. May run
/// partitioned across threads (capped by FOLDLOOP_THREADS); the summary
/// is identical regardless of parallelism.
/// Practical ceiling: the scan touches (2(m-1))^n words per length, so
/// keep m_max <= 7 and n_max <= 8 for interactive use.
SearchSummary search_folds(int m_max, int n_max);

}  // namespace foldloop
