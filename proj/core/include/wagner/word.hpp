#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "wagner/errors.hpp"

namespace wagner {

/// One letter a_i^{+1} or a_i^{-1} of a free group with basis a_1, a_2, ...
/// Encoded as a signed generator index: +i for a_i, -i for a_i^{-1}.
class Letter {
 public:
  constexpr Letter(int generator, int sign) : code_(0) {
    if (generator < 1) throw DomainError("letter generator index must be >= 1");
    if (sign != 1 && sign != -1) throw DomainError("letter sign must be +1 or -1");
    code_ = sign > 0 ? generator : -generator;
  }

  static constexpr Letter from_code(std::int32_t code) {
    if (code == 0) throw DomainError("letter code must be nonzero");
    return Letter(code > 0 ? code : -code, code > 0 ? 1 : -1);
  }

  constexpr int generator() const { return code_ > 0 ? code_ : -code_; }
  constexpr int sign() const { return code_ > 0 ? 1 : -1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  /// Rank of this letter in the fixed enumeration order a, a^{-1}, b, b^{-1}, ...
  constexpr int canonical_index() const {
    return 2 * (generator() - 1) + (code_ < 0 ? 1 : 0);
  }
  static constexpr Letter from_canonical_index(int index) {
    return Letter(index / 2 + 1, index % 2 == 0 ? 1 : -1);
  }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& other) const {
    return canonical_index() <=> other.canonical_index();
  }

 private:
  std::int32_t code_;
};

/// A reduced word: a letter sequence with no adjacent cancelling pair.
/// The empty word is the group identity.  Instances are immutable and always
/// reduced; every factory performs (or asserts) free reduction.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  /// Wraps a sequence the caller guarantees is already reduced
  /// (checked by assertion in debug builds).
  static Word from_reduced(std::vector<Letter> letters);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;

  /// Largest generator index used, 0 for the empty word.
  int max_generator() const;

  bool operator==(const Word&) const = default;

  /// Length-then-lexicographic order (by canonical letter index); this is the
  /// enumeration order used throughout.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }
inline Word invert(const Word& w) { return w.inverse(); }

/// Reduced product uv.
Word concat(const Word& u, const Word& v);

/// Number of occurrences of a_i or a_i^{-1} in w (Phi_{a_i}(w)).
std::size_t letter_count(const Word& w, int generator);

/// Occurrences of a_i minus occurrences of a_i^{-1}; the abelianized
/// coefficient of a_i in w.
long long signed_letter_count(const Word& w, int generator);

}  // namespace wagner
