#include "wagner/counting.hpp"

#include <limits>
#include <sstream>

namespace wagner {

BigInt count_words_exact(int m, int p) {
  if (m < 1) throw DomainError("rank must be >= 1");
  if (p < 0) throw DomainError("length must be >= 0");
  if (p == 0) return 1;
  BigInt count = 2 * m;
  for (int j = 1; j < p; ++j) count *= 2 * m - 1;
  return count;
}

BigInt count_words_at_most(int m, int p) {
  if (m < 1) throw DomainError("rank must be >= 1");
  if (p < 0) throw DomainError("length must be >= 0");
  if (m == 1) return 2 * p + 1;
  // (m(2m-1)^p - 1)/(m-1); the division is exact.
  BigInt pow = 1;
  for (int j = 0; j < p; ++j) pow *= 2 * m - 1;
  return (m * pow - 1) / (m - 1);
}

void enumerate_words(int m, int p, const std::function<bool(const Word&)>& visit,
                     std::uint64_t budget) {
  if (m < 1) throw DomainError("rank must be >= 1");
  if (p < 0) throw DomainError("length must be >= 0");
  if (count_words_at_most(m, p) > budget) {
    std::ostringstream msg;
    msg << "ball of rank " << m << ", radius " << p << " holds "
        << count_words_at_most(m, p) << " words, over budget " << budget;
    throw BudgetExceededError(msg.str());
  }

  // Depth-first in canonical letter order emits each length class in
  // lexicographic order; emitting a prefix before its extensions would break
  // the length-first contract, so lengths are walked outermost.
  std::vector<Letter> stack;
  for (int len = 0; len <= p; ++len) {
    bool stop = false;
    auto walk = [&](auto&& self) -> void {
      if (stop) return;
      if (stack.size() == static_cast<std::size_t>(len)) {
        if (!visit(Word::from_reduced(stack))) stop = true;
        return;
      }
      for (int idx = 0; idx < 2 * m && !stop; ++idx) {
        Letter next = Letter::from_canonical_index(idx);
        if (!stack.empty() && stack.back().cancels(next)) continue;
        stack.push_back(next);
        self(self);
        stack.pop_back();
      }
    };
    walk(walk);
    if (stop) return;
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_below needs n >= 1");
  if (n == 1) return 0;
  // Rejection from the largest multiple of n below 2^64.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  for (;;) {
    std::uint64_t draw = rng();
    if (draw <= limit) return draw % n;
  }
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& n) {
  if (n <= 0) throw DomainError("uniform_below needs n >= 1");
  if (n == 1) return 0;
  // Sample fixed-width blocks one 64-bit word beyond n and reject the
  // overshoot; acceptance probability is at least 1 - 2^{-64}.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  const unsigned blocks = (bits + 63) / 64 + 1;
  BigInt range = BigInt(1) << (64 * blocks);
  BigInt limit = range - range % n;  // reject draws >= limit
  for (;;) {
    BigInt draw = 0;
    for (unsigned b = 0; b < blocks; ++b) {
      draw <<= 64;
      draw += rng();
    }
    if (draw < limit) return draw % n;
  }
}

Word sample_uniform_word(int m, int p, std::mt19937_64& rng) {
  if (m < 1) throw DomainError("rank must be >= 1");
  if (p < 0) throw DomainError("length must be >= 0");

  // Pick the length class in proportion to its exact cardinality.
  BigInt pick = uniform_below(rng, count_words_at_most(m, p));
  int len = 0;
  BigInt acc = 0;
  for (; len <= p; ++len) {
    acc += count_words_exact(m, len);
    if (pick < acc) break;
  }

  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int t = 0; t < len; ++t) {
    if (t == 0) {
      letters.push_back(Letter::from_canonical_index(
          static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * m)))));
    } else {
      // Uniform among the 2m-1 letters that do not cancel the previous one:
      // draw from the full alphabet with the forbidden inverse removed by
      // skipping over its canonical index.
      int forbidden = letters.back().inverse().canonical_index();
      int draw = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * m - 1)));
      if (draw >= forbidden) ++draw;
      letters.push_back(Letter::from_canonical_index(draw));
    }
  }
  return Word::from_reduced(std::move(letters));
}

}  // namespace wagner
