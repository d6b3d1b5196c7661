#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "wagner/parse.hpp"

namespace testsupport {

wagner::Word word(const std::string& letters) {
  std::vector<wagner::Letter> raw;
  raw.reserve(letters.size());
  for (char c : letters) {
    if (c >= 'a' && c <= 'z') {
      raw.push_back(wagner::Letter(c - 'a' + 1, +1));
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(wagner::Letter(c - 'A' + 1, -1));
    } else if (c != ' ' && c != '1') {
      throw std::invalid_argument("bad letter in test word: " + letters);
    }
  }
  return wagner::Word::reduce(std::span<const wagner::Letter>(raw.data(), raw.size()));
}

wagner::Endomorphism endo(const std::string& rules) {
  return wagner::parse_endomorphism(rules).endomorphism;
}

wagner::Word random_reduced_word(std::mt19937_64& rng, int rank, int length) {
  std::vector<wagner::Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int t = 0; t < length; ++t) {
    if (letters.empty()) {
      letters.push_back(wagner::Letter::from_canonical_index(
          static_cast<int>(rng() % static_cast<std::uint64_t>(2 * rank))));
    } else {
      int forbidden = letters.back().inverse().canonical_index();
      int draw = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * rank - 1));
      if (draw >= forbidden) ++draw;
      letters.push_back(wagner::Letter::from_canonical_index(draw));
    }
  }
  return wagner::Word::from_reduced(std::move(letters));
}

wagner::Endomorphism random_endomorphism(std::mt19937_64& rng, int rank,
                                         int max_len) {
  std::vector<wagner::Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    images.push_back(random_reduced_word(rng, rank, len));
  }
  return wagner::Endomorphism(rank, std::move(images));
}

namespace {

// Letters of the middle word carry their 1-based position; everything else
// carries 0.  Free reduction over the whole product then reveals exactly
// which middle letters survive.
struct Tagged {
  wagner::Letter letter;
  std::size_t tag;
};

void push_tagged(std::vector<Tagged>& stack, wagner::Letter l, std::size_t tag) {
  if (!stack.empty() && stack.back().letter.cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(Tagged{l, tag});
  }
}

std::set<std::size_t> surviving_positions(const wagner::Word& z,
                                          const wagner::Word& u,
                                          const wagner::Word& y) {
  std::vector<Tagged> stack;
  for (wagner::Letter l : z.letters()) push_tagged(stack, l, 0);
  for (std::size_t t = 0; t < u.length(); ++t) push_tagged(stack, u.at(t), t + 1);
  for (wagner::Letter l : y.letters()) push_tagged(stack, l, 0);
  std::set<std::size_t> alive;
  for (const Tagged& t : stack) {
    if (t.tag > 0) alive.insert(t.tag);
  }
  return alive;
}

}  // namespace

std::optional<wagner::RemnantSpan> brute_remnant_span(
    const wagner::Endomorphism& phi, int generator) {
  const wagner::Word& u = phi.image(generator);
  if (u.empty()) return std::nullopt;

  std::vector<wagner::Word> factors;  // allowed on either side
  for (int j = 1; j <= phi.rank(); ++j) {
    factors.push_back(phi.image(j));
    if (j != generator) factors.push_back(phi.image(j).inverse());
  }

  std::set<std::size_t> alive;
  for (std::size_t t = 1; t <= u.length(); ++t) alive.insert(t);
  for (const wagner::Word& z : factors) {
    for (const wagner::Word& y : factors) {
      std::set<std::size_t> here = surviving_positions(z, u, y);
      std::set<std::size_t> kept;
      std::set_intersection(alive.begin(), alive.end(), here.begin(), here.end(),
                            std::inserter(kept, kept.begin()));
      alive = std::move(kept);
      if (alive.empty()) return std::nullopt;
    }
  }
  const std::size_t lo = *alive.begin();
  const std::size_t hi = *alive.rbegin();
  if (alive.size() != hi - lo + 1) {
    throw std::logic_error("surviving positions are not contiguous");
  }
  return wagner::RemnantSpan{lo, hi};
}

std::vector<long long> brute_class_index_sums(const wagner::Endomorphism& phi) {
  const std::vector<wagner::WagnerTail> tails = wagner::wagner_tails(phi);
  const std::size_t n = tails.size();

  // Breadth-first components of the explicit all-pairs relation graph.
  std::vector<bool> seen(n, false);
  std::vector<long long> sums;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    long long sum = 0;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      sum += tails[v].index;
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && wagner::directly_related(tails[v], tails[w])) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    sums.push_back(sum);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

std::size_t brute_essential_count(const wagner::Endomorphism& phi) {
  std::vector<long long> sums = brute_class_index_sums(phi);
  return static_cast<std::size_t>(
      std::count_if(sums.begin(), sums.end(), [](long long s) { return s != 0; }));
}

double eigen_spectral_radius(const wagner::IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                    .convert_to<double>();
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  double radius = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
  }
  return radius;
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

wagner::BigInt primitive_walk_count(const wagner::IntMatrix& b, int d) {
  wagner::BigInt count = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    count += moebius(d / e) * b.power(static_cast<unsigned>(e)).trace();
  }
  return count;
}

wagner::Endomorphism relabel(const wagner::Endomorphism& phi,
                             const std::vector<int>& perm) {
  const int m = phi.rank();
  auto apply_perm = [&](const wagner::Word& w) {
    std::vector<wagner::Letter> out;
    out.reserve(w.length());
    for (wagner::Letter l : w.letters()) {
      out.push_back(
          wagner::Letter(perm[static_cast<std::size_t>(l.generator() - 1)], l.sign()));
    }
    return wagner::Word::from_reduced(std::move(out));
  };
  // psi(a_{perm(i)}) = perm(phi(a_i))
  std::vector<wagner::Word> images(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    images[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)] =
        apply_perm(phi.image(i));
  }
  return wagner::Endomorphism(m, std::move(images));
}

}  // namespace testsupport
