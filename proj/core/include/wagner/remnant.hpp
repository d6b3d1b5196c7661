#pragma once

#include <optional>
#include <vector>

#include "wagner/endomorphism.hpp"

namespace wagner {

/// Positions of Rem_phi a_i within phi(a_i), 1-indexed and inclusive.
struct RemnantSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start + 1; }

  /// True when position t (1-indexed) lies strictly inside the span.
  bool strictly_contains(std::size_t t) const { return start < t && t < end; }

  bool operator==(const RemnantSpan&) const = default;
};

/// Per-generator remnant spans of an endomorphism; nullopt marks a generator
/// whose image is destroyed entirely by some allowed product (no remnant).
class RemnantDecomposition {
 public:
  explicit RemnantDecomposition(std::vector<std::optional<RemnantSpan>> spans)
      : spans_(std::move(spans)) {}

  int rank() const { return static_cast<int>(spans_.size()); }
  const std::optional<RemnantSpan>& span(int generator) const;

  /// Remnant length of the generator, 0 when it has none.
  std::size_t length(int generator) const;

  /// True iff every generator has a nonempty remnant.
  bool complete() const;

  bool operator==(const RemnantDecomposition&) const = default;

 private:
  std::vector<std::optional<RemnantSpan>> spans_;
};

/// The maximal subword of each phi(a_i) surviving every allowed product
/// phi(a_j)^{±1} phi(a_i) phi(a_k)^{±1} (factors equal to phi(a_i)^{-1} are
/// excluded on both sides).  Computed as independent worst-case left/right
/// erosion, which agrees with the product definition because cancellation
/// against a fixed factor is a pure prefix/suffix phenomenon.
RemnantDecomposition remnant_decomposition(const Endomorphism& phi);

/// The remnant subword itself (empty Word when the generator has none).
Word remnant_word(const Endomorphism& phi, const RemnantDecomposition& dec,
                  int generator);

bool has_remnant(const Endomorphism& phi);

/// phi in R_k: every remnant exists and has length >= k (k >= 1).
bool in_rk(const Endomorphism& phi, std::size_t k);

/// phi in S_l: every remnant exists and contains every generator at least
/// l times, in either sign (l >= 1).
bool in_sl(const Endomorphism& phi, std::size_t l);

/// Largest l with phi in S_l, i.e. min over i,j of letterCount(Rem_phi a_j, i);
/// 0 when some generator has no remnant.
std::size_t max_sl_level(const Endomorphism& phi);

}  // namespace wagner
