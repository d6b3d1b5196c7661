#include "wagner/remnant.hpp"

#include <algorithm>
#include <sstream>

namespace wagner {
namespace {

// Letters cancelled at the boundary of the reduced product x.y.
std::size_t boundary_cancellation(const Word& x, const Word& y) {
  std::size_t c = 0;
  const std::size_t limit = std::min(x.length(), y.length());
  while (c < limit && x.at(x.length() - 1 - c).cancels(y.at(c))) ++c;
  return c;
}

}  // namespace

const std::optional<RemnantSpan>& RemnantDecomposition::span(int generator) const {
  if (generator < 1 || generator > rank()) {
    std::ostringstream msg;
    msg << "generator " << generator << " out of range for rank " << rank();
    throw RankMismatchError(msg.str());
  }
  return spans_[static_cast<std::size_t>(generator - 1)];
}

std::size_t RemnantDecomposition::length(int generator) const {
  const auto& s = span(generator);
  return s ? s->length() : 0;
}

bool RemnantDecomposition::complete() const {
  return std::all_of(spans_.begin(), spans_.end(),
                     [](const auto& s) { return s.has_value(); });
}

RemnantDecomposition remnant_decomposition(const Endomorphism& phi) {
  const int m = phi.rank();

  std::vector<Word> inverses;
  inverses.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) inverses.push_back(phi.image(j).inverse());

  std::vector<std::optional<RemnantSpan>> spans;
  spans.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const Word& u = phi.image(i);
    if (u.empty()) {
      spans.push_back(std::nullopt);
      continue;
    }
    // Allowed factors on either side are phi(a_j)^{±1} except phi(a_i)^{-1},
    // whose product with u would collapse outright (2m-1 factors per side).
    std::size_t left = 0;
    std::size_t right = 0;
    for (int j = 1; j <= m; ++j) {
      const Word& w = phi.image(j);
      const Word& winv = inverses[static_cast<std::size_t>(j - 1)];
      left = std::max(left, boundary_cancellation(w, u));
      right = std::max(right, boundary_cancellation(u, w));
      if (j != i) {
        left = std::max(left, boundary_cancellation(winv, u));
        right = std::max(right, boundary_cancellation(u, winv));
      }
    }
    if (left + right >= u.length()) {
      spans.push_back(std::nullopt);
    } else {
      spans.push_back(RemnantSpan{left + 1, u.length() - right});
    }
  }
  return RemnantDecomposition(std::move(spans));
}

Word remnant_word(const Endomorphism& phi, const RemnantDecomposition& dec,
                  int generator) {
  const auto& s = dec.span(generator);
  if (!s) return Word();
  const Word& u = phi.image(generator);
  std::vector<Letter> letters;
  letters.reserve(s->length());
  for (std::size_t t = s->start; t <= s->end; ++t) letters.push_back(u.at(t - 1));
  return Word::from_reduced(std::move(letters));
}

bool has_remnant(const Endomorphism& phi) {
  return remnant_decomposition(phi).complete();
}

bool in_rk(const Endomorphism& phi, std::size_t k) {
  if (k < 1) throw DomainError("R_k requires k >= 1");
  RemnantDecomposition dec = remnant_decomposition(phi);
  for (int i = 1; i <= phi.rank(); ++i) {
    if (dec.length(i) < k) return false;
  }
  return true;
}

bool in_sl(const Endomorphism& phi, std::size_t l) {
  if (l < 1) throw DomainError("S_l requires l >= 1");
  return max_sl_level(phi) >= l;
}

std::size_t max_sl_level(const Endomorphism& phi) {
  RemnantDecomposition dec = remnant_decomposition(phi);
  if (!dec.complete()) return 0;
  std::size_t level = SIZE_MAX;
  for (int j = 1; j <= phi.rank(); ++j) {
    Word rem = remnant_word(phi, dec, j);
    for (int i = 1; i <= phi.rank(); ++i) {
      level = std::min(level, letter_count(rem, i));
    }
  }
  return level;
}

}  // namespace wagner
