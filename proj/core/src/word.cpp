#include "wagner/word.hpp"

#include <algorithm>

namespace wagner {

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::from_reduced(std::vector<Letter> letters) {
#ifndef NDEBUG
  for (std::size_t i = 1; i < letters.size(); ++i) {
    assert(!letters[i - 1].cancels(letters[i]) && "from_reduced given an unreduced word");
  }
#endif
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

int Word::max_generator() const {
  int best = 0;
  for (Letter l : letters_) best = std::max(best, l.generator());
  return best;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (auto cmp = letters_[i] <=> other.letters_[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

Word concat(const Word& u, const Word& v) {
  // Only the boundary can cancel: strip the longest mutually-inverse
  // suffix/prefix pair, then splice.
  std::size_t cancel = 0;
  const std::size_t limit = std::min(u.length(), v.length());
  while (cancel < limit && u.at(u.length() - 1 - cancel).cancels(v.at(cancel))) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(u.length() + v.length() - 2 * cancel);
  out.insert(out.end(), u.letters().begin(), u.letters().end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), v.letters().begin() + static_cast<std::ptrdiff_t>(cancel), v.letters().end());
  return Word::from_reduced(std::move(out));
}

std::size_t letter_count(const Word& w, int generator) {
  std::size_t n = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == generator) ++n;
  }
  return n;
}

long long signed_letter_count(const Word& w, int generator) {
  long long n = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == generator) n += l.sign();
  }
  return n;
}

}  // namespace wagner
