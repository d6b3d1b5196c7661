#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "wagner/word.hpp"

namespace wagner {

using BigInt = boost::multiprecision::cpp_int;

/// Number of reduced words of length exactly p in rank m:
/// 1 for p = 0, else 2m(2m-1)^{p-1}.
BigInt count_words_exact(int m, int p);

/// Number of reduced words of length at most p (the ball G_p):
/// 1 + sum of the exact counts.  For m >= 2 this equals
/// (m(2m-1)^p - 1)/(m-1); for m = 1 it is 2p + 1.
BigInt count_words_at_most(int m, int p);

/// Default ceiling on how many words enumerate_words will visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Visits every reduced word of length <= p exactly once, in
/// length-then-lexicographic order (letters ordered a < a^{-1} < b < ...).
/// The visitor may return false to stop early.  Throws BudgetExceededError
/// if the ball holds more than `budget` words.
void enumerate_words(int m, int p, const std::function<bool(const Word&)>& visit,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Uniform integer in [0, n) drawn by rejection from 64-bit blocks, so the
/// stream of variates is identical across platforms for a given seed
/// (std::uniform_int_distribution makes no such promise).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);
BigInt uniform_below(std::mt19937_64& rng, const BigInt& n);

/// A word distributed uniformly over the ball G_p = {w : |w| <= p}: the
/// length j is chosen with probability count_exact(m,j)/|G_p| (exact
/// arithmetic), then letters are drawn uniformly subject to reducedness.
Word sample_uniform_word(int m, int p, std::mt19937_64& rng);

}  // namespace wagner
