#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "wagner/counting.hpp"
#include "wagner/density.hpp"
#include "wagner/errors.hpp"

using testsupport::word;
using namespace wagner;

TEST_SUITE_BEGIN("counting");

TEST_CASE("closed-form word counts") {
  CHECK(count_words_exact(2, 0) == 1);
  CHECK(count_words_exact(2, 1) == 4);
  CHECK(count_words_exact(2, 2) == 12);
  CHECK(count_words_at_most(2, 2) == 17);
  CHECK(count_words_at_most(3, 0) == 1);
  for (int p = 0; p <= 8; ++p) {
    CHECK(count_words_at_most(1, p) == 2 * p + 1);
  }
  // Ball size is the running sum of the exact sphere sizes.
  for (int m = 1; m <= 4; ++m) {
    BigInt running = 0;
    for (int p = 0; p <= 6; ++p) {
      running += count_words_exact(m, p);
      CHECK(count_words_at_most(m, p) == running);
    }
  }
  CHECK_THROWS_AS(count_words_exact(0, 1), DomainError);
  CHECK_THROWS_AS(count_words_at_most(1, -1), DomainError);
}

TEST_CASE("enumerate_words visits the exact ball in order") {
  std::vector<Word> seen;
  enumerate_words(1, 2, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  REQUIRE(seen.size() == 5);
  CHECK(seen[0] == Word());
  CHECK(seen[1] == word("a"));
  CHECK(seen[2] == word("A"));
  CHECK(seen[3] == word("aa"));
  CHECK(seen[4] == word("AA"));

  for (int m = 1; m <= 3; ++m) {
    for (int p = 0; p <= 5; ++p) {
      std::set<Word> unique;
      std::size_t visits = 0;
      Word previous;
      enumerate_words(m, p, [&](const Word& w) {
        if (visits > 0) CHECK(previous < w);  // strict length-then-lex order
        CHECK(w.length() <= static_cast<std::size_t>(p));
        CHECK(w.max_generator() <= m);
        previous = w;
        unique.insert(w);
        ++visits;
        return true;
      });
      CHECK(BigInt(visits) == count_words_at_most(m, p));
      CHECK(unique.size() == visits);
    }
  }
}

TEST_CASE("enumerate_words early stop and budget") {
  std::size_t visits = 0;
  enumerate_words(2, 3, [&](const Word&) { return ++visits < 7; });
  CHECK(visits == 7);

  CHECK_THROWS_AS(
      enumerate_words(2, 10, [](const Word&) { return true; }, 100),
      BudgetExceededError);
}

TEST_CASE("uniform_below is deterministic and in range") {
  std::mt19937_64 a(42), b(42);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t x = uniform_below(a, 37);
    CHECK(x < 37);
    CHECK(x == uniform_below(b, 37));
  }
  std::mt19937_64 c(7);
  const BigInt n = BigInt("123456789123456789123456789");
  for (int trial = 0; trial < 50; ++trial) {
    BigInt x = uniform_below(c, n);
    CHECK(x >= 0);
    CHECK(x < n);
  }
  std::mt19937_64 d(1);
  CHECK(uniform_below(d, 1) == 0);
  CHECK_THROWS_AS(uniform_below(d, std::uint64_t{0}), DomainError);
}

TEST_CASE("sample_uniform_word stays in the ball and hits p = 0") {
  std::mt19937_64 rng(2024);
  CHECK(sample_uniform_word(2, 0, rng) == Word());
  for (int trial = 0; trial < 500; ++trial) {
    Word w = sample_uniform_word(2, 3, rng);
    CHECK(w.length() <= 3);
    CHECK(w.max_generator() <= 2);
    CHECK(Word::reduce(w.letters()) == w);
  }
}

TEST_CASE("sampled identity frequency matches 1/|G_1|") {
  // Ball G_1 in rank 2 has 5 words, so P(identity) = 1/5.
  std::mt19937_64 rng(99);
  const int samples = 20000;
  int hits = 0;
  for (int trial = 0; trial < samples; ++trial) {
    if (sample_uniform_word(2, 1, rng).empty()) ++hits;
  }
  double lo = 0.0, hi = 1.0;
  wilson_interval(hits, samples, kWilsonZ99, lo, hi);
  CHECK(lo <= 0.2);
  CHECK(0.2 <= hi);
}

TEST_CASE("sampled length histogram tracks exact sphere weights") {
  const int m = 2, p = 6, samples = 40000;
  std::mt19937_64 rng(512);
  std::map<std::size_t, int> histogram;
  for (int trial = 0; trial < samples; ++trial) {
    ++histogram[sample_uniform_word(m, p, rng).length()];
  }
  const double ball = static_cast<double>(count_words_at_most(m, p));
  for (int j = 0; j <= p; ++j) {
    const double q = static_cast<double>(count_words_exact(m, j)) / ball;
    const double sigma = std::sqrt(q * (1.0 - q) * samples);
    const double observed = histogram[static_cast<std::size_t>(j)];
    CHECK(std::abs(observed - q * samples) <= 4.0 * sigma + 1.0);
  }
}

TEST_CASE("every word of a small ball is reachable and roughly uniform") {
  // |G_2| = 17 in rank 2; with 34000 draws each word expects 2000 hits.
  const int samples = 34000;
  std::mt19937_64 rng(77);
  std::map<Word, int> histogram;
  for (int trial = 0; trial < samples; ++trial) {
    ++histogram[sample_uniform_word(2, 2, rng)];
  }
  CHECK(histogram.size() == 17);
  const double q = 1.0 / 17.0;
  const double sigma = std::sqrt(q * (1.0 - q) * samples);
  for (const auto& [w, count] : histogram) {
    CHECK(std::abs(count - q * samples) <= 4.0 * sigma);
  }
}

TEST_SUITE_END();
