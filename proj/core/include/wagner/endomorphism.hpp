#pragma once

#include <cstddef>
#include <vector>

#include "wagner/word.hpp"

namespace wagner {

/// Default ceiling on image lengths produced by apply/compose/iterate.
/// Iterated images grow exponentially; the cap turns runaway blowup into a
/// CapExceededError instead of memory exhaustion.
inline constexpr std::size_t kDefaultLengthCap = 1'000'000;

/// An endomorphism of the free group of the given rank, stored as the list
/// of (reduced) images of the generators a_1, ..., a_m.
class Endomorphism {
 public:
  /// Validates that every image only uses generators 1..rank.
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int generator) const;
  const std::vector<Word>& images() const { return images_; }

  /// phi(w), freely reduced.  Throws CapExceededError if the reduced result
  /// would exceed length_cap; the error's reached_power() is 1.
  Word apply(const Word& w, std::size_t length_cap = kDefaultLengthCap) const;

  bool operator==(const Endomorphism&) const = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

/// Composite phi . psi (apply psi first).  Both must have the same rank.
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi,
                     std::size_t length_cap = kDefaultLengthCap);

/// phi^n (n >= 0; n = 0 is the identity).  Computed by iterated composition;
/// CapExceededError::reached_power() reports the first power whose images
/// overflow the cap.
Endomorphism iterate(const Endomorphism& phi, int n,
                     std::size_t length_cap = kDefaultLengthCap);

}  // namespace wagner
