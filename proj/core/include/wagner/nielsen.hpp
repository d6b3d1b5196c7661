#pragma once

#include <optional>
#include <vector>

#include "wagner/remnant.hpp"

namespace wagner {

/// Where an occurrence tail comes from: the letter a_i^{exponent} at
/// 1-indexed position within phi(a_i).  BASE tails carry no origin.
struct TailOrigin {
  int generator = 0;
  std::size_t position = 0;
  int exponent = 0;

  bool operator==(const TailOrigin&) const = default;
};

/// A Wagner tail (w, wbar) with its fixed point index contribution.
/// For the occurrence of a_i^e at position t of phi(a_i) = v a_i^e vbar:
///   e = +1:  (w, wbar) = (v, vbar^{-1}),        index -1
///   e = -1:  (w, wbar) = (v a_i^{-1}, vbar^{-1} a_i), index +1
/// The BASE tail is (1, 1) with index +1 (the choice is pinned by the
/// Lefschetz consistency property; see fixed_point_classes).
struct WagnerTail {
  Word w;
  Word wbar;
  int index = 0;
  std::optional<TailOrigin> origin;  // nullopt marks the BASE tail
  bool inside_remnant = false;

  bool operator==(const WagnerTail&) const = default;
};

/// All Wagner tails of phi: the BASE tail first, then one tail per
/// occurrence of a_i^{±1} in phi(a_i), generators in order, positions
/// left to right.
std::vector<WagnerTail> wagner_tails(const Endomorphism& phi);

/// Tails are directly related when {w1, wbar1} and {w2, wbar2} intersect
/// (reduced-word equality).
bool directly_related(const WagnerTail& t1, const WagnerTail& t2);

/// Per-tail bookkeeping kept by the partition; boundary words are not
/// materialized here (they are prefixes of the images and their inverses,
/// and can be reconstructed via wagner_tails when needed for display).
struct TailSummary {
  int index = 0;
  std::optional<TailOrigin> origin;
  bool inside_remnant = false;
  std::size_t class_id = 0;
};

/// Fixed point classes of phi: the partition of Wagner tails under the
/// transitive closure of the direct relation, with per-class index sums.
class FixedPointClassPartition {
 public:
  FixedPointClassPartition(std::vector<TailSummary> tails,
                           std::vector<std::vector<std::size_t>> classes,
                           bool remnant_complete);

  std::size_t tail_count() const { return tails_.size(); }
  const TailSummary& tail(std::size_t t) const { return tails_[t]; }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const {
    return classes_[c];
  }
  long long class_index_sum(std::size_t c) const { return index_sums_[c]; }

  /// Classes with nonzero index sum; equals N(phi) when phi has remnant.
  std::size_t essential_class_count() const;

  /// Tails not directly (hence not indirectly) related to any other tail.
  std::size_t isolated_tail_count() const;

  /// #W(phi): tails occurring strictly inside the remnant.
  std::size_t inside_remnant_count() const;

  /// Sum of all tail indices; always equals the Lefschetz number.
  long long total_index() const;

  /// Whether every generator had a remnant, i.e. whether Wagner's theorem
  /// certifies essential_class_count() as the Nielsen number.
  bool remnant_complete() const { return remnant_complete_; }

 private:
  std::vector<TailSummary> tails_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<long long> index_sums_;
  bool remnant_complete_;
};

FixedPointClassPartition fixed_point_classes(const Endomorphism& phi);

/// Raised by the certified counts below when phi lacks remnant; carries the
/// partition so callers can still inspect the (uncertified) class data.
class NoRemnantError : public Error {
 public:
  NoRemnantError(const std::string& what, FixedPointClassPartition partition)
      : Error(what), partition_(std::move(partition)) {}

  const FixedPointClassPartition& partition() const { return partition_; }

  /// The class count Wagner's algorithm produced anyway; not certified
  /// to equal N(phi).
  std::size_t uncertified_count() const {
    return partition_.essential_class_count();
  }

 private:
  FixedPointClassPartition partition_;
};

/// N(phi) for phi with remnant.  Throws NoRemnantError otherwise.
std::size_t nielsen_number(const Endomorphism& phi);

/// Number of tails in singleton classes.  Throws NoRemnantError.
std::size_t isolated_tail_count(const Endomorphism& phi);

/// #W(phi), the tails occurring inside the remnant.  Throws NoRemnantError.
std::size_t w_count(const Endomorphism& phi);

/// 1 - sum_i (signed count of a_i in phi(a_i)): the trace formula on the
/// rose.  Defined for every phi; equals the total tail index, which the
/// tests use as a consistency oracle.
long long lefschetz_number(const Endomorphism& phi);

}  // namespace wagner
