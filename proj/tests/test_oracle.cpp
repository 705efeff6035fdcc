#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "abelruns/oracle.hpp"
#include "support.hpp"

using namespace abelruns;

namespace {
const Alphabet kAB = Alphabet::from_symbols("ab");
}

namespace {

// Number of head lengths giving a valid two-core factorization of
// word[i..j], checked straight from the definition.
std::size_t count_factorizations(const std::string& word, std::size_t i,
                                 std::size_t j, const ParikhVector& period,
                                 const Alphabet& alphabet) {
  const std::size_t p = period.norm();
  const std::size_t span = j - i + 1;
  std::size_t found = 0;
  for (std::size_t h = 0; h < p && h <= span; ++h) {
    const std::size_t rem = span - h;
    const std::size_t cores = rem / p;
    const std::size_t tail = rem % p;
    if (cores < 2) continue;
    bool ok = strictly_contains(period, parikh_of(word.substr(i, h), alphabet));
    for (std::size_t c = 0; ok && c < cores; ++c) {
      ok = parikh_of(word.substr(i + h + c * p, p), alphabet) == period;
    }
    if (ok) {
      ok = strictly_contains(
          period, parikh_of(word.substr(j + 1 - tail, tail), alphabet));
    }
    if (ok) ++found;
  }
  return found;
}

}  // namespace

TEST_CASE("abbabba admits two factorizations with period (1,2)") {
  // a.bba.bba and abb.abb.a both fit; the max-core witness returned is the
  // shortest-tail one
  Alphabet ab = Alphabet::from_word("abbabba");
  ParikhVector p12 = parikh_of("abb", ab);
  CHECK(count_factorizations("abbabba", 0, 6, p12, ab) == 2);
  auto w = oracle::is_periodic("abbabba", 0, 6, p12, ab);
  REQUIRE(w.has_value());
  CHECK(w->cores == 2);
  CHECK(w->tail == 0);
  CHECK(w->head == 1);
}

TEST_CASE("ababaaa prefix witness") {
  ParikhVector p11 = ParikhVector::parse("1,1");
  auto w = oracle::is_periodic("ababaaa", 0, 5, p11, kAB);
  REQUIRE(w.has_value());
  CHECK(w->head == 1);
  CHECK(w->tail == 1);
  CHECK(w->cores == 2);
}

TEST_CASE("a single core is not periodic") {
  ParikhVector p11 = ParikhVector::parse("1,1");
  CHECK_FALSE(oracle::is_periodic("ab", 0, 1, p11, kAB).has_value());
  CHECK_THROWS_AS(oracle::is_periodic("ab", 0, 2, p11, kAB),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::is_periodic("ab", 1, 0, p11, kAB),
                  std::invalid_argument);
}

TEST_CASE("oracle abelian runs on the paper words") {
  ParikhVector p11 = ParikhVector::parse("1,1");
  auto runs = oracle::abelian_runs("ababaaa", p11, kAB);
  CHECK(testsupport::normalized(runs) ==
        std::vector<std::string>{"0,1,1,5:1,1"});

  runs = oracle::abelian_runs("abab", p11, kAB);
  CHECK(testsupport::normalized(runs) ==
        std::vector<std::string>{"0,0,0,3:1,1"});

  runs = oracle::abelian_runs("abaababaabbb", ParikhVector::parse("2,2"), kAB);
  CHECK(testsupport::normalized(runs) ==
        std::vector<std::string>{"0,3,1,11:2,2"});
}

TEST_CASE("oracle anchored runs on ababaaa") {
  ParikhVector p11 = ParikhVector::parse("1,1");
  auto runs = oracle::anchored_runs("ababaaa", p11, kAB);
  // the 0-anchored run w[0..4] and the 1-anchored run w[0..5]
  CHECK(testsupport::normalized(runs) ==
        std::vector<std::string>{"0,0,1,4:1,1", "0,1,1,5:1,1"});
  CHECK(runs[0].anchor() + runs[1].anchor() == 1);
}

TEST_CASE("oracle all runs") {
  CHECK(oracle::all_runs("a").empty());
  CHECK(oracle::all_runs("").empty());
  auto runs = oracle::all_runs("ababaaa");
  auto rendered = testsupport::normalized(runs);
  CHECK(std::find(rendered.begin(), rendered.end(), "0,1,1,5:1,1") !=
        rendered.end());
}

TEST_CASE("oracle squares") {
  using Sq = std::pair<std::size_t, std::size_t>;
  CHECK(oracle::squares("aababa") ==
        std::vector<Sq>{{0, 1}, {1, 2}, {2, 2}, {0, 3}});
  CHECK(oracle::squares("ab").empty());
  CHECK(oracle::squares("aaaa") ==
        std::vector<Sq>{{0, 1}, {1, 1}, {2, 1}, {0, 2}});
}

TEST_CASE("max-core witness has the shortest tail among valid anchors") {
  // exhaustive on short binary words: recompute every valid factorization of
  // every fragment and check the returned witness dominates
  testsupport::for_each_word("ab", 1, 8, [&](const std::string& word) {
    Alphabet ab = Alphabet::from_symbols("ab");
    for (std::size_t norm = 1; norm <= word.size(); ++norm) {
      for (const auto& period : testsupport::vectors_of_norm(2, norm)) {
        for (std::size_t i = 0; i < word.size(); ++i) {
          for (std::size_t j = i; j < word.size(); ++j) {
            auto witness = oracle::is_periodic(word, i, j, period, ab);
            if (!witness) continue;
            const std::size_t p = period.norm();
            const std::size_t span = j - i + 1;
            // enumerate valid head lengths by definition
            std::size_t best_cores = 0, best_tail = 0;
            for (std::size_t h = 0; h < p && h <= span; ++h) {
              std::size_t rem = span - h;
              std::size_t cores = rem / p, tail = rem % p;
              if (cores < 2) continue;
              bool ok =
                  strictly_contains(period, parikh_of(word.substr(i, h), ab));
              for (std::size_t c = 0; ok && c < cores; ++c) {
                ok = parikh_of(word.substr(i + h + c * p, p), ab) == period;
              }
              if (ok) {
                ok = strictly_contains(
                    period, parikh_of(word.substr(j + 1 - tail, tail), ab));
              }
              if (!ok) continue;
              if (cores > best_cores ||
                  (cores == best_cores && tail < best_tail)) {
                best_cores = cores;
                best_tail = tail;
              }
            }
            REQUIRE(best_cores >= 2);
            CHECK(witness->cores == best_cores);
            CHECK(witness->tail == best_tail);
          }
        }
      }
    }
  });
}

TEST_CASE("oracle outputs satisfy the run invariants") {
  testsupport::for_each_word("ab", 1, 9, [&](const std::string& word) {
    for (const auto& runs : {oracle::all_runs(word)}) {
      for (const Run& r : runs) {
        const std::size_t p = r.period.norm();
        CHECK(r.head < p);
        CHECK(r.tail < p);
        CHECK((r.end - r.start - r.head - r.tail + 1) % p == 0);
        CHECK(r.cores() >= 2);
        CHECK(r.end < word.size());
        CHECK(r.start <= r.end);
      }
    }
  });
}
