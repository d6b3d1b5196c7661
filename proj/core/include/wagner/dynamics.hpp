#pragma once

#include <optional>
#include <vector>

#include "wagner/matrix.hpp"
#include "wagner/nielsen.hpp"

namespace wagner {

/// One row of the Nielsen growth table for phi^n.
struct NielsenSequenceRow {
  int n = 0;
  std::size_t nielsen_number = 0;
  double root = 0.0;  // N(phi^n)^{1/n}
  std::size_t w_count = 0;
  std::size_t isolated_tail_count = 0;
  long long lefschetz = 0;
  double elapsed_ms = 0.0;
};

struct NielsenSequence {
  std::vector<NielsenSequenceRow> rows;
  /// First power whose images overflowed the length cap, when the table
  /// stopped early; rows then cover 1..capped_at-1.
  std::optional<int> capped_at;
};

/// N(phi^n) for n = 1..n_max via Wagner's algorithm on the iterates.
/// Throws NoRemnantError when phi itself has no remnant; a cap hit before
/// any row completes is rethrown as CapExceededError, otherwise the partial
/// table is returned with capped_at set.
NielsenSequence nielsen_sequence(const Endomorphism& phi, int n_max,
                                 std::size_t length_cap = kDefaultLengthCap);

/// Bounds on the asymptotic Nielsen number N^infty(f).
struct AsymptoticBounds {
  /// Certified lower bound l*m, present only when phi is verified in S_l.
  std::optional<double> lower;
  /// max(1, rho(fox matrix)); applied unconditionally, as cited.
  double upper = 0.0;
};

AsymptoticBounds asymptotic_bounds(const Endomorphism& phi, std::size_t l);

/// The closed-form growth bounds in the parameters l (remnant letter
/// count), m (rank), n (power).  Values can be negative for small l, m;
/// the raw integers are kept alongside companions clamped at zero for use
/// as count bounds.
struct ClosedFormBounds {
  BigInt w_bound;                    // l^n m^n - 2m
  BigInt w_bound_clamped;
  std::optional<BigInt> pn_bound;    // m((m-1)l - 2)(m-1)^{n-2} l^{n-1}; n >= 2
  std::optional<BigInt> pn_bound_clamped;
  BigInt remnant_letter_bound;       // l^n m^{n-1}
};

/// pn_bound needs (m-1)^{n-2}, so it is absent in the degenerate case n = 1.
ClosedFormBounds closed_form_bounds(int l, int m, int n);

/// Growth of iterated image lengths and the entropy bounds they carry.
struct EntropyEstimates {
  std::vector<std::size_t> ln;       // L_n = max_i |phi^n(a_i)|, n = 1..n_max
  std::vector<double> h_sequence;    // log(L_n)/n diagnostic per n
  double h_estimate = 0.0;           // log(L_{n_max})/n_max
  /// log(l*m) for the largest verified l with phi in S_l; absent when even
  /// S_1 fails.
  std::optional<double> certified_lower;
};

EntropyEstimates entropy_estimates(const Endomorphism& phi, int n_max,
                                   std::size_t length_cap = kDefaultLengthCap);

}  // namespace wagner
