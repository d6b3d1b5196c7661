#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wagner/counting.hpp"
#include "wagner/endomorphism.hpp"

namespace wagner {

using BigRational = boost::multiprecision::cpp_rational;

/// A named test over endomorphisms (the name travels into reports/CSV).
struct EndomorphismPredicate {
  std::string id;
  std::function<bool(const Endomorphism&)> test;
};

/// Monte-Carlo estimate of the density of a predicate over maps with images
/// in the ball G_p, with a 99% Wilson score interval.
struct DensityEstimate {
  int m = 0;
  int p = 0;
  std::string predicate_id;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
};

/// z for the two-sided 99% Wilson interval.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

/// Wilson score interval for `hits` successes out of `samples` draws.
void wilson_interval(std::uint64_t hits, std::uint64_t samples, double z,
                     double& lo, double& hi);

/// m independent uniform draws from G_p, one per generator image.
Endomorphism sample_endomorphism(int m, int p, std::mt19937_64& rng);

/// Samples are drawn in fixed chunks of this size, each chunk with its own
/// seed derived from (seed, chunk index).  Workers pull whole chunks, so the
/// hit count is identical for any thread count.
inline constexpr std::uint64_t kSampleChunk = 1024;

/// i.i.d. evaluation of the predicate over sampled endomorphisms;
/// deterministic given (seed, samples) regardless of `threads`.  A throwing
/// predicate aborts the run with the failing sample index attached.
DensityEstimate estimate_density(const EndomorphismPredicate& predicate, int m,
                                 int p, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads = 1);

/// |{phi with images in G_p : predicate}| / |G_p|^m by full enumeration.
/// Throws BudgetExceededError when |G_p|^m exceeds the budget.
BigRational exact_density(const EndomorphismPredicate& predicate, int m, int p,
                          std::uint64_t budget = kDefaultEnumerationBudget);

/// ((2m-3)/(2m-1))^{k-2}: the decay bound on the density, within R_k, of
/// maps missing S_1.  Needs m >= 2 (the derivation does) and k >= 2
/// (k = 2 gives the vacuous bound 1).
double conditional_complement_bound(int m, int k);

/// One estimate per radius in p_list; row seeds are derived from (seed, p)
/// and recorded in each row, so any row reproduces standalone.
std::vector<DensityEstimate> density_curve(const EndomorphismPredicate& predicate,
                                           int m, const std::vector<int>& p_list,
                                           std::uint64_t samples, std::uint64_t seed,
                                           unsigned threads = 1);

}  // namespace wagner
