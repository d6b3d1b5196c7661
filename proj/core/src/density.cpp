#include "wagner/density.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

namespace wagner {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

void wilson_interval(std::uint64_t hits, std::uint64_t samples, double z,
                     double& lo, double& hi) {
  if (samples == 0) throw DomainError("Wilson interval needs samples >= 1");
  if (hits > samples) throw DomainError("Wilson interval needs hits <= samples");
  const double n = static_cast<double>(samples);
  const double phat = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  lo = std::max(0.0, center - half);
  hi = std::min(1.0, center + half);
}

Endomorphism sample_endomorphism(int m, int p, std::mt19937_64& rng) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images.push_back(sample_uniform_word(m, p, rng));
  return Endomorphism(m, std::move(images));
}

DensityEstimate estimate_density(const EndomorphismPredicate& predicate, int m,
                                 int p, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads) {
  if (samples < 1) throw DomainError("estimate_density needs samples >= 1");
  if (threads < 1) threads = 1;

  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> total_hits{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (failure) return;
      }
      const std::uint64_t begin = c * kSampleChunk;
      const std::uint64_t end = std::min(samples, begin + kSampleChunk);
      std::mt19937_64 rng(mix64(seed ^ mix64(c)));
      std::uint64_t local_hits = 0;
      for (std::uint64_t s = begin; s < end; ++s) {
        try {
          if (predicate.test(sample_endomorphism(m, p, rng))) ++local_hits;
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) {
            std::ostringstream msg;
            msg << "predicate '" << predicate.id << "' failed at sample " << s
                << ": " << e.what();
            failure = std::make_exception_ptr(Error(msg.str()));
          }
          return;
        }
      }
      total_hits.fetch_add(local_hits);
    }
  };

  const unsigned worker_count =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  DensityEstimate out;
  out.m = m;
  out.p = p;
  out.predicate_id = predicate.id;
  out.samples = samples;
  out.hits = total_hits.load();
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(samples);
  wilson_interval(out.hits, out.samples, kWilsonZ99, out.ci_lo, out.ci_hi);
  out.seed = seed;
  return out;
}

BigRational exact_density(const EndomorphismPredicate& predicate, int m, int p,
                          std::uint64_t budget) {
  if (m < 1) throw DomainError("rank must be >= 1");
  const BigInt ball = count_words_at_most(m, p);
  BigInt tuples = 1;
  for (int i = 0; i < m; ++i) tuples *= ball;
  if (tuples > budget) {
    std::ostringstream msg;
    msg << "exact density over " << tuples << " tuples exceeds budget " << budget;
    throw BudgetExceededError(msg.str());
  }

  std::vector<Word> ball_words;
  ball_words.reserve(ball.convert_to<std::size_t>());
  enumerate_words(m, p, [&](const Word& w) {
    ball_words.push_back(w);
    return true;
  });

  // Odometer over all m-tuples of ball words.
  BigInt hits = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::vector<Word> images;
    images.reserve(idx.size());
    for (std::size_t i : idx) images.push_back(ball_words[i]);
    if (predicate.test(Endomorphism(m, std::move(images)))) ++hits;

    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == ball_words.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return BigRational(hits, tuples);
}

double conditional_complement_bound(int m, int k) {
  if (m < 2) {
    throw DomainError("the decay bound needs m >= 2 (its derivation divides by 2m-2)");
  }
  if (k < 2) throw DomainError("the decay bound needs k >= 2");
  return std::pow((2.0 * m - 3.0) / (2.0 * m - 1.0), k - 2);
}

std::vector<DensityEstimate> density_curve(const EndomorphismPredicate& predicate,
                                           int m, const std::vector<int>& p_list,
                                           std::uint64_t samples, std::uint64_t seed,
                                           unsigned threads) {
  std::vector<DensityEstimate> rows;
  rows.reserve(p_list.size());
  for (int p : p_list) {
    const std::uint64_t row_seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(p)));
    rows.push_back(estimate_density(predicate, m, p, samples, row_seed, threads));
  }
  return rows;
}

}  // namespace wagner
