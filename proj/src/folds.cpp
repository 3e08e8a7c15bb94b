#include "foldloop/folds.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "foldloop/band.hpp"

namespace foldloop {

namespace {

Generator generator_from_ordinal(int ordinal) {
  return {ordinal / 2 + 1, ordinal % 2 == 0 ? 1 : -1};
}

int search_thread_count() {
  if (const char* env = std::getenv("FOLDLOOP_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Least valid fold of the given length whose first letter has the given
// ordinal, if any. Enumeration order makes the first hit the least one.
std::optional<BraidWord> least_fold_in_branch(int strands, int length,
                                              int first_ordinal) {
  std::optional<BraidWord> found;
  enumerate_words(strands, length - 1, [&](const BraidWord& suffix) {
    std::vector<Generator> letters;
    letters.reserve(length);
    letters.push_back(generator_from_ordinal(first_ordinal));
    letters.insert(letters.end(), suffix.letters().begin(),
                   suffix.letters().end());
    BraidWord word(strands, std::move(letters));
    if (is_valid_fold(word)) {
      found = std::move(word);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<BraidWord> least_fold_of_length(int strands, int length) {
  if (length == 0) {
    BraidWord empty(strands);
    if (is_valid_fold(empty)) return empty;
    return std::nullopt;
  }
  const int alphabet = 2 * (strands - 1);
  if (alphabet == 0) return std::nullopt;

  const int threads = std::min(search_thread_count(), alphabet);
  std::vector<std::optional<BraidWord>> per_branch(alphabet);
  if (threads <= 1) {
    for (int b = 0; b < alphabet; ++b) {
      per_branch[b] = least_fold_in_branch(strands, length, b);
      if (per_branch[b]) break;
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (int b = w; b < alphabet; b += threads) {
          per_branch[b] = least_fold_in_branch(strands, length, b);
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
  }
  for (int b = 0; b < alphabet; ++b) {
    if (per_branch[b]) return per_branch[b];
  }
  return std::nullopt;
}

}  // namespace

FoldReport fold_report(const BraidWord& word) {
  return {word.strands(),        word.length(),
          exponent_sum(word),    component_count(word),
          is_valid_fold(word),   word};
}

BraidWord make_fold(int loops) {
  if (loops < 1 || loops % 2 == 0) {
    throw EvenLoopCount("no untwisted fold into " + std::to_string(loops) +
                        " loops exists");
  }
  std::vector<Generator> letters;
  letters.reserve(loops - 1);
  for (int i = 1; i < loops; ++i) {
    letters.push_back({i, i % 2 == 1 ? 1 : -1});
  }
  return BraidWord(loops, std::move(letters));
}

BraidWord nest(const BraidWord& outer, const BraidWord& inner) {
  if (!is_valid_fold(outer) || !is_valid_fold(inner)) {
    throw InvalidFold("nest requires two valid folds");
  }
  const int shift = outer.strands() - 1;
  std::vector<Generator> letters = outer.letters();
  letters.reserve(outer.length() + inner.length());
  for (const Generator& g : inner.letters()) {
    letters.push_back({g.index + shift, g.sign});
  }
  return BraidWord(outer.strands() + inner.strands() - 1, std::move(letters));
}

bool enumerate_words(int strands, int length,
                     const std::function<bool(const BraidWord&)>& visit) {
  if (strands < 1 || length < 0) {
    throw std::invalid_argument("bad enumeration bounds");
  }
  const int alphabet = 2 * (strands - 1);
  if (length == 0) return visit(BraidWord(strands));
  if (alphabet == 0) return true;  // no words of positive length on 1 strand

  std::vector<int> ordinals(length, 0);
  while (true) {
    std::vector<Generator> letters;
    letters.reserve(length);
    for (int ordinal : ordinals) {
      letters.push_back(generator_from_ordinal(ordinal));
    }
    if (!visit(BraidWord(strands, std::move(letters)))) return false;
    // advance the odometer, most significant slot first
    int slot = length - 1;
    while (slot >= 0 && ordinals[slot] == alphabet - 1) {
      ordinals[slot] = 0;
      --slot;
    }
    if (slot < 0) return true;
    ++ordinals[slot];
  }
}

SearchSummary search_folds(int m_max, int n_max) {
  SearchSummary summary;
  summary.m_max = m_max;
  summary.n_max = n_max;
  for (int m = 1; m <= m_max; ++m) {
    SearchEntry entry;
    for (int n = 0; n <= n_max; ++n) {
      if (std::optional<BraidWord> witness = least_fold_of_length(m, n)) {
        entry.fold_found = true;
        entry.minimal_n = n;
        entry.witness = std::move(witness);
        break;
      }
    }
    summary.per_m.emplace(m, std::move(entry));
  }
  return summary;
}

}  // namespace foldloop
