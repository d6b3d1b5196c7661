#include "wagner/periodic.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace wagner {
namespace {

// Reachability table for pruning walks: feasible[g][k] says a chain of k
// further locations starting in block g can end on a letter of the target
// generator.  Chains step block g -> block j exactly when B[g][j] > 0.
std::vector<std::vector<bool>> feasibility(const IntMatrix& b, int target, int n) {
  const std::size_t m = b.dim();
  std::vector<std::vector<bool>> feasible(
      m, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (std::size_t g = 0; g < m; ++g) {
    feasible[g][1] = b.at(g, static_cast<std::size_t>(target - 1)) > 0;
  }
  for (int k = 2; k <= n; ++k) {
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t j = 0; j < m; ++j) {
        if (b.at(g, j) > 0 && feasible[j][static_cast<std::size_t>(k - 1)]) {
          feasible[g][static_cast<std::size_t>(k)] = true;
          break;
        }
      }
    }
  }
  return feasible;
}

void check_budget(const Endomorphism& phi, int n, std::uint64_t budget) {
  BigInt count = fixed_point_count(phi, n);
  if (count > budget) {
    std::ostringstream msg;
    msg << "power " << n << " has " << count << " fixed points, over budget "
        << budget << "; enumeration refused";
    throw BudgetExceededError(msg.str());
  }
}

struct AddressHash {
  std::size_t operator()(const Address& a) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::size_t r : a) {
      h ^= r + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

LocationTable::LocationTable(const Endomorphism& phi) {
  sums_.push_back(0);
  for (int i = 1; i <= phi.rank(); ++i) {
    const Word& u = phi.image(i);
    for (std::size_t p = 1; p <= u.length(); ++p) {
      locations_.push_back(Location{i, p, u.at(p - 1)});
    }
    sums_.push_back(sums_.back() + u.length());
  }
}

std::size_t LocationTable::prefix_sum(int i) const {
  if (i < 0 || i > rank()) {
    std::ostringstream msg;
    msg << "prefix sum index " << i << " out of range for rank " << rank();
    throw DomainError(msg.str());
  }
  return sums_[static_cast<std::size_t>(i)];
}

const Location& LocationTable::location(std::size_t r) const {
  if (r < 1 || r > total()) {
    std::ostringstream msg;
    msg << "location " << r << " out of range 1.." << total();
    throw DomainError(msg.str());
  }
  return locations_[r - 1];
}

bool is_round_trip(const LocationTable& table, const Address& addr) {
  if (addr.empty()) return false;
  const std::size_t n = addr.size();
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t r = addr[t];
    if (r < 1 || r > table.total()) return false;
    int gen = table.location(r).letter.generator();
    std::size_t next = addr[(t + 1) % n];
    if (next < table.block_begin(gen) || next > table.block_end(gen)) return false;
  }
  return true;
}

BigInt fixed_point_count(const Endomorphism& phi, int n) {
  if (n < 1) throw DomainError("fixed_point_count needs n >= 1");
  return 1 + occurrence_matrix(phi).power(static_cast<unsigned>(n)).trace();
}

void enumerate_round_trips(const Endomorphism& phi, int n,
                           const std::function<bool(const Address&)>& visit,
                           std::uint64_t budget) {
  if (n < 1) throw DomainError("enumerate_round_trips needs n >= 1");
  check_budget(phi, n, budget);

  const LocationTable table(phi);
  const IntMatrix b = occurrence_matrix(phi);
  Address path(static_cast<std::size_t>(n));
  bool stop = false;

  for (int start_block = 1; start_block <= phi.rank() && !stop; ++start_block) {
    const auto feasible = feasibility(b, start_block, n);
    for (std::size_t r1 = table.block_begin(start_block);
         r1 <= table.block_end(start_block) && !stop; ++r1) {
      path[0] = r1;
      int gen1 = table.location(r1).letter.generator();
      if (n == 1) {
        if (gen1 == start_block && !visit(path)) stop = true;
        continue;
      }
      if (!feasible[static_cast<std::size_t>(gen1 - 1)][static_cast<std::size_t>(n - 1)]) {
        continue;
      }
      auto extend = [&](auto&& self, int t, int block) -> void {
        // t locations chosen so far; the next lives in `block`.
        if (stop) return;
        for (std::size_t r = table.block_begin(block);
             r <= table.block_end(block) && !stop; ++r) {
          int gen = table.location(r).letter.generator();
          path[static_cast<std::size_t>(t)] = r;
          if (t + 1 == n) {
            if (gen == start_block && !visit(path)) stop = true;
          } else if (feasible[static_cast<std::size_t>(gen - 1)]
                             [static_cast<std::size_t>(n - t - 1)]) {
            self(self, t + 1, gen);
          }
        }
      };
      extend(extend, 1, gen1);
    }
  }
}

std::vector<Address> round_trips(const Endomorphism& phi, int n,
                                 std::uint64_t budget) {
  std::vector<Address> out;
  enumerate_round_trips(
      phi, n,
      [&](const Address& a) {
        out.push_back(a);
        return true;
      },
      budget);
  return out;
}

int minimal_period(const Address& addr) {
  const int n = static_cast<int>(addr.size());
  if (n == 0) throw DomainError("minimal_period of an empty address");
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = 0; i < n && periodic; ++i) {
      periodic = addr[static_cast<std::size_t>(i)] ==
                 addr[static_cast<std::size_t>((i + d) % n)];
    }
    if (periodic) return d;
  }
  return n;
}

std::vector<Address> orbit_of(const Address& addr) {
  const int p = minimal_period(addr);
  std::vector<Address> orbit;
  orbit.reserve(static_cast<std::size_t>(p));
  Address current = addr;
  for (int k = 0; k < p; ++k) {
    orbit.push_back(current);
    std::rotate(current.begin(), current.begin() + 1, current.end());
  }
  return orbit;
}

std::vector<PeriodicPointRecord> label_fixed_points(const Endomorphism& phi,
                                                    int n, std::uint64_t budget) {
  if (n < 1) throw DomainError("label_fixed_points needs n >= 1");
  check_budget(phi, n, budget);

  const LocationTable table(phi);
  const IntMatrix b = occurrence_matrix(phi);

  std::vector<PeriodicPointRecord> records;
  records.push_back(PeriodicPointRecord{0, Address{}, 1, {0}});

  // Labels follow the left-to-right scan of the unreduced expansion of
  // phi^n(a_i): walk the derivation tree depth-first, traversing a block in
  // ascending position while the accumulated orientation is positive and
  // descending after an odd number of inverted letters.
  std::uint64_t next_label = 1;
  Address path(static_cast<std::size_t>(n));
  for (int i = 1; i <= phi.rank(); ++i) {
    const auto feasible = feasibility(b, i, n);
    auto scan = [&](auto&& self, int t, int block, int orientation) -> void {
      const std::size_t lo = table.block_begin(block);
      const std::size_t hi = table.block_end(block);
      for (std::size_t step = 0; step < hi - lo + 1; ++step) {
        std::size_t r = orientation > 0 ? lo + step : hi - step;
        const Letter l = table.location(r).letter;
        path[static_cast<std::size_t>(t)] = r;
        if (t + 1 == n) {
          if (l.generator() == i) {
            records.push_back(PeriodicPointRecord{
                next_label++, path, minimal_period(path), {}});
          }
        } else if (feasible[static_cast<std::size_t>(l.generator() - 1)]
                           [static_cast<std::size_t>(n - t - 1)]) {
          self(self, t + 1, l.generator(), orientation * l.sign());
        }
      }
    };
    scan(scan, 0, i, +1);
  }

  std::unordered_map<Address, std::uint64_t, AddressHash> label_of;
  label_of.reserve(records.size());
  for (const auto& rec : records) {
    if (!rec.address.empty()) label_of.emplace(rec.address, rec.label);
  }
  for (auto& rec : records) {
    if (rec.address.empty()) continue;
    rec.orbit.reserve(static_cast<std::size_t>(rec.minimal_period));
    for (const Address& shifted : orbit_of(rec.address)) {
      rec.orbit.push_back(label_of.at(shifted));
    }
  }
  return records;
}

std::map<int, std::uint64_t> minimal_period_census(const Endomorphism& phi,
                                                   int n, std::uint64_t budget) {
  std::map<int, std::uint64_t> census;
  enumerate_round_trips(
      phi, n,
      [&](const Address& a) {
        ++census[minimal_period(a)];
        return true;
      },
      budget);
  return census;
}

BigInt certified_minimal_points(const Endomorphism& phi, std::size_t l, int n) {
  if (n < 2) throw DomainError("certified_minimal_points needs n >= 2");
  if (!in_sl(phi, l)) {
    std::ostringstream msg;
    msg << "endomorphism not verified in S_" << l
        << "; the minimal-period construction is not certified";
    throw NotInSlError(msg.str(), l);
  }

  const RemnantDecomposition dec = remnant_decomposition(phi);
  const LocationTable table(phi);
  const IntMatrix b = occurrence_matrix(phi);
  const int m = phi.rank();

  BigInt total = 0;
  for (int k = 1; k <= m; ++k) {
    // v[j] = choices of r_1: strictly-interior remnant locations of block k
    // whose letter generator is j != k.
    std::vector<BigInt> v(static_cast<std::size_t>(m) + 1, 0);
    const auto& span = dec.span(k);
    for (std::size_t r = table.block_begin(k); r <= table.block_end(k); ++r) {
      const Location& loc = table.location(r);
      if (!span->strictly_contains(loc.position)) continue;
      if (loc.letter.generator() == k) continue;
      v[static_cast<std::size_t>(loc.letter.generator())] += 1;
    }
    // Middle transitions r_2..r_{n-1} avoid generator k entirely.
    for (int step = 0; step < n - 2; ++step) {
      std::vector<BigInt> w(static_cast<std::size_t>(m) + 1, 0);
      for (int j = 1; j <= m; ++j) {
        if (j == k || v[static_cast<std::size_t>(j)] == 0) continue;
        for (int j2 = 1; j2 <= m; ++j2) {
          if (j2 == k) continue;
          w[static_cast<std::size_t>(j2)] +=
              v[static_cast<std::size_t>(j)] *
              b.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j2 - 1));
        }
      }
      v = std::move(w);
    }
    // Final step r_n: a location of a_k^{±1} in the current block.
    for (int j = 1; j <= m; ++j) {
      if (j == k) continue;
      total += v[static_cast<std::size_t>(j)] *
               b.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1));
    }
  }
  return total;
}

}  // namespace wagner
