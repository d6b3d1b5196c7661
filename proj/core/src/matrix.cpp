#include "wagner/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wagner {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (dim_ != other.dim_) throw DomainError("matrix dimension mismatch");
  IntMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const BigInt& lhs = at(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += lhs * other.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::power(unsigned n) const {
  IntMatrix result = identity(dim_);
  IntMatrix base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::entrywise_leq(const IntMatrix& other) const {
  if (dim_ != other.dim_) throw DomainError("matrix dimension mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (at(i, j) > other.at(i, j)) return false;
    }
  }
  return true;
}

IntMatrix occurrence_matrix(const Endomorphism& phi) {
  const std::size_t m = static_cast<std::size_t>(phi.rank());
  IntMatrix b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Word& u = phi.image(static_cast<int>(i) + 1);
    for (Letter l : u.letters()) {
      b.at(i, static_cast<std::size_t>(l.generator() - 1)) += 1;
    }
  }
  return b;
}

IntMatrix fox_magnitude_matrix(const Endomorphism& phi) {
  IntMatrix b = occurrence_matrix(phi);
  IntMatrix t(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) t.at(i, j) = b.at(j, i);
  }
  return t;
}

namespace {

// Strongly connected components of the support digraph (edge i->j iff
// entry (i,j) > 0), by Tarjan's algorithm with an explicit stack.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const IntMatrix& m) {
  const std::size_t n = m.dim();
  constexpr std::size_t kUnvisited = SIZE_MAX;
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next_child < n) {
        std::size_t w = f.next_child++;
        if (m.at(f.v, w) == 0) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back(Frame{w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      if (low[f.v] == index[f.v]) {
        components.emplace_back();
        for (;;) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          components.back().push_back(w);
          if (w == f.v) break;
        }
      }
      std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  return components;
}

// Perron root of an irreducible component, via power iteration on the
// +I shift (primitive, so Collatz-Wielandt brackets contract to a point).
double component_radius(const std::vector<std::vector<double>>& a, double tol,
                        unsigned budget) {
  const std::size_t d = a.size();
  std::vector<double> x(d, 1.0 / static_cast<double>(d));
  std::vector<double> y(d);
  double lo = 0.0, hi = 0.0;
  for (unsigned it = 0; it < budget; ++it) {
    for (std::size_t i = 0; i < d; ++i) {
      double s = x[i];  // the +I shift
      for (std::size_t j = 0; j < d; ++j) s += a[i][j] * x[j];
      y[i] = s;
    }
    lo = y[0] / x[0];
    hi = lo;
    for (std::size_t i = 1; i < d; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= tol) return (lo + hi) / 2.0 - 1.0;
    double sum = std::accumulate(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i) x[i] = y[i] / sum;
  }
  std::ostringstream msg;
  msg << "spectral radius bracket [" << (lo - 1.0) << ", " << (hi - 1.0)
      << "] did not contract to " << tol << " within " << budget << " iterations";
  throw ConvergenceError(msg.str(), lo - 1.0, hi - 1.0);
}

}  // namespace

double spectral_radius(const IntMatrix& m, double tol, unsigned budget) {
  if (tol <= 0) throw DomainError("spectral radius tolerance must be positive");
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.at(i, j) < 0) throw DomainError("spectral radius needs a nonnegative matrix");
    }
  }
  double radius = 0.0;
  for (const auto& comp : strongly_connected_components(m)) {
    if (comp.size() == 1) {
      // A trivial component contributes its (possibly zero) self-loop weight.
      radius = std::max(radius, m.at(comp[0], comp[0]).convert_to<double>());
      continue;
    }
    std::vector<std::vector<double>> block(comp.size(),
                                           std::vector<double>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) {
        block[i][j] = m.at(comp[i], comp[j]).convert_to<double>();
      }
    }
    radius = std::max(radius, component_radius(block, tol, budget));
  }
  return radius;
}

}  // namespace wagner
