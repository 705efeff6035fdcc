#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "abelruns/fixed_norm.hpp"
#include "abelruns/oracle.hpp"
#include "support.hpp"

using namespace abelruns;

namespace {
const Alphabet kAB = Alphabet::from_symbols("ab");
}

TEST_CASE("norm 4 on the worked example finds only the (2,2) run") {
  auto runs = abelian_runs_norm("abaababaabbb", 4, kAB);
  CHECK(testsupport::normalized(runs) ==
        std::vector<std::string>{"0,3,1,11:2,2"});
}

TEST_CASE("norm 2 on ababaaa includes the (1,1) run") {
  auto runs = abelian_runs_norm("ababaaa", 2, kAB);
  auto rendered = testsupport::normalized(runs);
  CHECK(std::find(rendered.begin(), rendered.end(), "0,1,1,5:1,1") !=
        rendered.end());
}

TEST_CASE("unary word, norm 1") {
  Alphabet a = Alphabet::from_word("aaaa");
  auto runs = abelian_runs_norm("aaaa", 1, a);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0] == Run{0, 0, 0, 3, ParikhVector::parse("1")});
}

TEST_CASE("norm larger than any two-core span yields nothing") {
  CHECK(abelian_runs_norm("ab", 3, kAB).empty());
  CHECK(abelian_runs_norm("", 1, kAB).empty());
}

TEST_CASE("norm scanner rejects norm zero and misuse") {
  CHECK_THROWS_AS(NormScanner(0, kAB, ScanMode::abelian),
                  std::invalid_argument);
  NormScanner s(2, kAB, ScanMode::abelian);
  s.finish();
  CHECK_THROWS_AS(s.finish(), std::logic_error);
  CHECK_THROWS_AS(s.push('a'), std::logic_error);
}

TEST_CASE("abaabab at norm 2 equals the oracle") {
  auto got = testsupport::normalized(abelian_runs_norm("abaabab", 2, kAB));
  auto want =
      testsupport::normalized(oracle::abelian_runs_norm("abaabab", 2, kAB));
  CHECK(got == want);
}

TEST_CASE("norm scanner equals the per-period oracle union on short words") {
  for (auto mode : {ScanMode::anchored, ScanMode::abelian}) {
    CAPTURE(mode == ScanMode::anchored ? "anchored" : "abelian");
    testsupport::for_each_word("ab", 1, 9, [&](const std::string& word) {
      for (std::size_t norm = 1; norm <= 4; ++norm) {
        auto got = mode == ScanMode::anchored
                       ? anchored_runs_norm(word, norm, kAB)
                       : abelian_runs_norm(word, norm, kAB);
        auto want = mode == ScanMode::anchored
                        ? oracle::anchored_runs_norm(word, norm, kAB)
                        : oracle::abelian_runs_norm(word, norm, kAB);
        auto got_n = testsupport::normalized(got);
        auto want_n = testsupport::normalized(want);
        if (got_n != want_n) {
          CAPTURE(word);
          CAPTURE(norm);
          REQUIRE(got_n == want_n);
        }
      }
    });
  }
}

TEST_CASE("no duplicate (start, end, period) triples") {
  testsupport::for_each_word("ab", 1, 10, [&](const std::string& word) {
    for (std::size_t norm = 1; norm <= 5; ++norm) {
      auto runs = abelian_runs_norm(word, norm, kAB);
      std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
      for (const Run& r : runs) {
        auto key = std::make_tuple(r.start, r.end, r.period.to_string());
        CHECK(seen.insert(key).second);
      }
    }
  });
}

TEST_CASE("runs are delivered as soon as their end is determined") {
  testsupport::for_each_word("ab", 1, 9, [&](const std::string& word) {
    for (std::size_t norm : {2, 3}) {
      NormScanner s(norm, kAB, ScanMode::abelian);
      for (std::size_t i = 0; i < word.size(); ++i) {
        for (const Run& r : s.push(static_cast<unsigned char>(word[i]))) {
          CHECK(r.end == i - 1);
        }
      }
      for (const Run& r : s.finish()) {
        CHECK(r.end == word.size() - 1);
      }
    }
  });
}

TEST_CASE("output is ordered by (end, start) and carries the period") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 30; ++rep) {
    std::string word = testsupport::random_word(rng, 120, "ab");
    for (std::size_t norm = 1; norm <= 6; ++norm) {
      auto runs = abelian_runs_norm(word, norm, kAB);
      for (std::size_t i = 1; i < runs.size(); ++i) {
        CHECK(std::make_pair(runs[i - 1].end, runs[i - 1].start) <
              std::make_pair(runs[i].end, runs[i].start));
      }
      for (const Run& r : runs) {
        CHECK(r.period.norm() == norm);
        CHECK(r.cores() >= 2);
        CHECK(r.head < norm);
        CHECK(r.tail < norm);
      }
    }
  }
}

TEST_CASE("three-letter spot check against the oracle") {
  Alphabet abc = Alphabet::from_symbols("abc");
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 80; ++rep) {
    std::string word = testsupport::random_word(rng, 40, "abc");
    for (std::size_t norm = 1; norm <= 5; ++norm) {
      for (auto mode : {ScanMode::anchored, ScanMode::abelian}) {
        auto got = mode == ScanMode::anchored
                       ? anchored_runs_norm(word, norm, abc)
                       : abelian_runs_norm(word, norm, abc);
        auto want = mode == ScanMode::anchored
                        ? oracle::anchored_runs_norm(word, norm, abc)
                        : oracle::abelian_runs_norm(word, norm, abc);
        auto got_n = testsupport::normalized(got);
        auto want_n = testsupport::normalized(want);
        if (got_n != want_n) {
          CAPTURE(word);
          CAPTURE(norm);
          REQUIRE(got_n == want_n);
        }
      }
    }
  }
}
