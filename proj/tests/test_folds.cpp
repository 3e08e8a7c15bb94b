#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "foldloop/band.hpp"
#include "foldloop/folds.hpp"
#include "util.hpp"

using namespace foldloop;
using testutil::word;

namespace {

// Naive route: filter the full enumeration with is_valid_fold.
SearchSummary search_by_filter(int m_max, int n_max) {
  SearchSummary summary;
  summary.m_max = m_max;
  summary.n_max = n_max;
  for (int m = 1; m <= m_max; ++m) {
    SearchEntry entry;
    for (int n = 0; n <= n_max && !entry.fold_found; ++n) {
      enumerate_words(m, n, [&](const BraidWord& w) {
        if (is_valid_fold(w)) {
          entry.fold_found = true;
          entry.minimal_n = n;
          entry.witness = w;
          return false;
        }
        return true;
      });
    }
    summary.per_m.emplace(m, std::move(entry));
  }
  return summary;
}

}  // namespace

TEST_CASE("make_fold") {
  CHECK(make_fold(1) == word(1, {}));
  CHECK(make_fold(3) == word(3, {1, -2}));
  CHECK(make_fold(5) == word(5, {1, -2, 3, -4}));
  CHECK_THROWS_AS(make_fold(2), EvenLoopCount);
  CHECK_THROWS_AS(make_fold(0), EvenLoopCount);
  for (int m = 1; m <= 15; m += 2) {
    const BraidWord fold = make_fold(m);
    CHECK(fold.length() == m - 1);
    CHECK(is_valid_fold(fold));
    CHECK(check_theorem(fold).theorem_holds);
  }
}

TEST_CASE("nest") {
  CHECK(nest(make_fold(3), make_fold(3)) == make_fold(5));
  CHECK(nest(word(1, {}), make_fold(3)) == make_fold(3));
  CHECK(nest(make_fold(3), word(1, {})) == make_fold(3));
  CHECK_THROWS_AS(nest(word(2, {1}), make_fold(3)), InvalidFold);
  CHECK_THROWS_AS(nest(make_fold(3), word(2, {1, 1})), InvalidFold);
}

TEST_CASE("nest produces valid folds and adds loop counts") {
  const std::vector<BraidWord> folds = {make_fold(1), make_fold(3),
                                        make_fold(5), make_fold(7)};
  for (const BraidWord& a : folds) {
    for (const BraidWord& b : folds) {
      const BraidWord nested = nest(a, b);
      CHECK(is_valid_fold(nested));
      CHECK(nested.strands() == a.strands() + b.strands() - 1);
      for (const BraidWord& c : folds) {
        CHECK(nest(a, nest(b, c)).strands() ==
              nest(nest(a, b), c).strands());
        CHECK(nest(a, nest(b, c)).strands() ==
              a.strands() + b.strands() + c.strands() - 2);
      }
    }
  }
}

TEST_CASE("enumerate_words") {
  std::vector<BraidWord> out;
  auto collect = [&](const BraidWord& w) {
    out.push_back(w);
    return true;
  };

  enumerate_words(2, 1, collect);
  CHECK(out == std::vector<BraidWord>{word(2, {1}), word(2, {-1})});

  out.clear();
  enumerate_words(3, 1, collect);
  CHECK(out == std::vector<BraidWord>{word(3, {1}), word(3, {-1}),
                                      word(3, {2}), word(3, {-2})});

  out.clear();
  enumerate_words(2, 0, collect);
  CHECK(out == std::vector<BraidWord>{word(2, {})});

  out.clear();
  enumerate_words(1, 3, collect);
  CHECK(out.empty());

  out.clear();
  enumerate_words(3, 3, collect);
  CHECK(out.size() == 64);  // (2(m-1))^n
  for (std::size_t i = 1; i < out.size(); ++i) {
    CHECK(word_less(out[i - 1], out[i]));
  }

  // early stop
  out.clear();
  const bool finished = enumerate_words(3, 2, [&](const BraidWord& w) {
    out.push_back(w);
    return out.size() < 3;
  });
  CHECK_FALSE(finished);
  CHECK(out.size() == 3);
}

TEST_CASE("search_folds examples") {
  const SearchSummary s3 = search_folds(3, 4);
  CHECK(s3.per_m.at(1).minimal_n == 0);
  CHECK(s3.per_m.at(1).witness == word(1, {}));
  CHECK_FALSE(s3.per_m.at(2).fold_found);
  CHECK_FALSE(s3.per_m.at(2).minimal_n.has_value());
  CHECK(s3.per_m.at(3).minimal_n == 2);
  CHECK(s3.per_m.at(3).witness == word(3, {1, -2}));

  const SearchSummary s5 = search_folds(5, 4);
  CHECK_FALSE(s5.per_m.at(4).fold_found);
  CHECK(s5.per_m.at(5).minimal_n == 4);
  // A length-4 fold on 5 strands uses each of s1..s4 exactly once with
  // two signs of each kind; +2 sorts before -2, so the least witness is
  // the sign-sorted word rather than the alternating one.
  CHECK(s5.per_m.at(5).witness == word(5, {1, 2, -3, -4}));
  CHECK(is_valid_fold(word(5, {1, -2, 3, -4})));  // alternating fold too

  const SearchSummary s1 = search_folds(1, 0);
  CHECK(s1.per_m.at(1).minimal_n == 0);
  CHECK(s1.per_m.at(1).witness == word(1, {}));
}

TEST_CASE("search_folds agrees with the filter route") {
  CHECK(search_folds(4, 5) == search_by_filter(4, 5));
}

TEST_CASE("search_folds is deterministic across thread counts") {
  const SearchSummary baseline = search_folds(4, 5);
  for (const char* threads : {"1", "2", "7"}) {
    setenv("FOLDLOOP_THREADS", threads, 1);
    CHECK(search_folds(4, 5) == baseline);
  }
  unsetenv("FOLDLOOP_THREADS");
}

TEST_CASE("minimal crossing count for odd loop counts is m - 1") {
  const SearchSummary summary = search_folds(6, 6);
  for (int m = 1; m <= 6; ++m) {
    if (m % 2 == 1) {
      CHECK(summary.per_m.at(m).minimal_n == m - 1);
    } else {
      CHECK_FALSE(summary.per_m.at(m).fold_found);
    }
  }
}

TEST_CASE("fold_report matches recomputation") {
  const FoldReport report = fold_report(word(3, {1, -2}));
  CHECK(report.m == 3);
  CHECK(report.n == 2);
  CHECK(report.writhe == 0);
  CHECK(report.components == 1);
  CHECK(report.valid);
  CHECK(report.word == word(3, {1, -2}));

  const FoldReport hopf = fold_report(word(2, {1, 1}));
  CHECK(hopf.components == 2);
  CHECK_FALSE(hopf.valid);
  CHECK(hopf.writhe == 2);
}
