#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wagner/matrix.hpp"
#include "wagner/remnant.hpp"

namespace wagner {

/// What a location resolves to: the letter of phi(a_block) at the given
/// 1-indexed position.
struct Location {
  int block;
  std::size_t position;
  Letter letter;
};

/// Global numbering 1..s_m of all letters of phi(a_1), ..., phi(a_m), where
/// s_i is the prefix sum of image lengths; location r with s_{i-1} < r <= s_i
/// lives in generator block i.
class LocationTable {
 public:
  explicit LocationTable(const Endomorphism& phi);

  int rank() const { return static_cast<int>(sums_.size()) - 1; }
  std::size_t total() const { return sums_.back(); }

  /// s_i; s_0 = 0.
  std::size_t prefix_sum(int i) const;

  std::size_t block_begin(int i) const { return prefix_sum(i - 1) + 1; }
  std::size_t block_end(int i) const { return prefix_sum(i); }

  const Location& location(std::size_t r) const;

 private:
  std::vector<std::size_t> sums_;
  std::vector<Location> locations_;
};

/// A round trip (r_1, ..., r_n): each r_{t+1} lies in the block of the
/// generator of r_t's letter, cyclically (so r_1 lies in the block of
/// gen(r_n)).  Addresses are in bijection with the non-base fixed points
/// of the n-th power of the standard form map.
using Address = std::vector<std::size_t>;

/// Checks the round-trip closure condition (used as a test oracle and for
/// validating external input).
bool is_round_trip(const LocationTable& table, const Address& addr);

/// 1 + trace(B^n): the base point plus one fixed point per length-n round
/// trip, where B is the occurrence matrix.
BigInt fixed_point_count(const Endomorphism& phi, int n);

inline constexpr std::uint64_t kDefaultAddressBudget = 1'000'000;

/// Every length-n round trip exactly once, lexicographically by
/// (r_1, ..., r_n).  The visitor may return false to stop.  Refuses to
/// enumerate (reporting the count) when 1 + trace(B^n) exceeds the budget.
void enumerate_round_trips(const Endomorphism& phi, int n,
                           const std::function<bool(const Address&)>& visit,
                           std::uint64_t budget = kDefaultAddressBudget);

std::vector<Address> round_trips(const Endomorphism& phi, int n,
                                 std::uint64_t budget = kDefaultAddressBudget);

/// Smallest divisor d of the length n such that the address repeats with
/// period d (r_i = r_j whenever i = j mod d); n itself when aperiodic.
int minimal_period(const Address& addr);

/// The distinct cyclic left-shifts, starting from the address itself;
/// exactly minimal_period(addr) of them.
std::vector<Address> orbit_of(const Address& addr);

/// One fixed point of the n-th power map: its label k_n, its address
/// (empty for the base point 0_n), minimal period, and the labels of its
/// orbit under the map (own label first).
struct PeriodicPointRecord {
  std::uint64_t label = 0;
  Address address;
  int minimal_period = 1;
  std::vector<std::uint64_t> orbit;
};

/// All fixed points of the n-th power, labelled 0_n (base point), then
/// 1_n, 2_n, ... in the left-to-right scan order of the unreduced
/// expansions of phi^n(a_1), ..., phi^n(a_m).  The expansions are never
/// materialized: the scan follows the derivation tree, reversing direction
/// through inverted letters.
std::vector<PeriodicPointRecord> label_fixed_points(
    const Endomorphism& phi, int n, std::uint64_t budget = kDefaultAddressBudget);

/// Count of non-base fixed points of the n-th power by minimal period d
/// (keys are the divisors of n with nonzero count; values sum to trace(B^n)).
std::map<int, std::uint64_t> minimal_period_census(
    const Endomorphism& phi, int n, std::uint64_t budget = kDefaultAddressBudget);

/// Exact count of addresses produced by the minimal-period construction:
/// pick a generator k; r_1 strictly inside Rem_phi a_k with letter generator
/// != k; r_2..r_{n-1} chained with generators != k; r_n a location of
/// a_k^{±1}.  Every such address has minimal period exactly n, so this is a
/// certified lower bound for the number of minimal-period-n points.
/// Requires phi in S_l (NotInSlError otherwise) and n >= 2.
BigInt certified_minimal_points(const Endomorphism& phi, std::size_t l, int n);

}  // namespace wagner
