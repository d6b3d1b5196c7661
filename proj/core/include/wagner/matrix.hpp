#pragma once

#include <cstddef>
#include <vector>

#include "wagner/counting.hpp"
#include "wagner/endomorphism.hpp"

namespace wagner {

/// Dense square matrix with arbitrary-precision nonnegative integer entries;
/// big enough for traces of B^n, which grow like rho^n.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, 0) {}

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;

  /// M^n by binary exponentiation; n = 0 gives the identity.
  IntMatrix power(unsigned n) const;

  BigInt trace() const;

  /// Entrywise comparison (every entry of *this <= the other's).
  bool entrywise_leq(const IntMatrix& other) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> cells_;
};

/// B[i][j] = Phi_{a_j}(phi(a_i)); row i sums to |phi(a_i)|.
IntMatrix occurrence_matrix(const Endomorphism& phi);

/// The Fox Jacobian magnitude matrix: entry (i,j) = Phi_{a_i}(phi(a_j)),
/// i.e. the transpose of occurrence_matrix.
IntMatrix fox_magnitude_matrix(const Endomorphism& phi);

inline constexpr double kSpectralRadiusTol = 1e-9;
inline constexpr unsigned kSpectralRadiusBudget = 100'000;

/// Perron root of a nonnegative square matrix, certified to absolute error
/// <= tol by Collatz-Wielandt brackets.  The matrix is split into strongly
/// connected components; each nontrivial component is power-iterated with a
/// +I diagonal shift (making it primitive), and the overall radius is the
/// maximum over components.  Throws ConvergenceError (carrying the last
/// bracket) if a component fails to converge within the iteration budget.
double spectral_radius(const IntMatrix& m, double tol = kSpectralRadiusTol,
                       unsigned budget = kSpectralRadiusBudget);

}  // namespace wagner
