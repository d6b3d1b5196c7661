#include "wagner/dynamics.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace wagner {
namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

NielsenSequence nielsen_sequence(const Endomorphism& phi, int n_max,
                                 std::size_t length_cap) {
  if (n_max < 1) throw DomainError("nielsen_sequence needs n_max >= 1");
  if (!has_remnant(phi)) {
    throw NoRemnantError(
        "endomorphism has no remnant; Wagner's theorem does not certify the "
        "class count",
        fixed_point_classes(phi));
  }

  NielsenSequence seq;
  Endomorphism power = Endomorphism::identity(phi.rank());
  for (int n = 1; n <= n_max; ++n) {
    auto start = std::chrono::steady_clock::now();
    try {
      power = compose(phi, power, length_cap);
    } catch (const CapExceededError&) {
      if (seq.rows.empty()) {
        std::ostringstream msg;
        msg << "image length exceeded cap " << length_cap << " at power " << n;
        throw CapExceededError(msg.str(), n, length_cap);
      }
      seq.capped_at = n;
      return seq;
    }
    // A remnant for phi gives one for every phi^n, so each row is certified.
    FixedPointClassPartition classes = fixed_point_classes(power);
    if (!classes.remnant_complete()) {
      throw NoRemnantError("iterate unexpectedly lost its remnant",
                           std::move(classes));
    }
    NielsenSequenceRow row;
    row.n = n;
    row.nielsen_number = classes.essential_class_count();
    row.root = std::pow(static_cast<double>(row.nielsen_number), 1.0 / n);
    row.w_count = classes.inside_remnant_count();
    row.isolated_tail_count = classes.isolated_tail_count();
    row.lefschetz = classes.total_index();
    row.elapsed_ms = ms_since(start);
    seq.rows.push_back(row);
  }
  return seq;
}

AsymptoticBounds asymptotic_bounds(const Endomorphism& phi, std::size_t l) {
  AsymptoticBounds bounds;
  bounds.upper = std::max(1.0, spectral_radius(fox_magnitude_matrix(phi)));
  if (in_sl(phi, l)) {
    bounds.lower = static_cast<double>(l) * phi.rank();
  }
  return bounds;
}

ClosedFormBounds closed_form_bounds(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) throw DomainError("closed-form bounds need l, m, n >= 1");
  auto ipow = [](BigInt base, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  ClosedFormBounds out;
  out.w_bound = ipow(BigInt(l) * m, n) - 2 * m;
  out.w_bound_clamped = out.w_bound < 0 ? 0 : out.w_bound;
  out.remnant_letter_bound = ipow(l, n) * ipow(m, n - 1);
  if (n >= 2) {
    BigInt pn = BigInt(m) * (BigInt(m - 1) * l - 2) * ipow(m - 1, n - 2) * ipow(l, n - 1);
    out.pn_bound = pn;
    out.pn_bound_clamped = pn < 0 ? BigInt(0) : pn;
  }
  return out;
}

EntropyEstimates entropy_estimates(const Endomorphism& phi, int n_max,
                                   std::size_t length_cap) {
  if (n_max < 1) throw DomainError("entropy_estimates needs n_max >= 1");
  EntropyEstimates out;
  Endomorphism power = Endomorphism::identity(phi.rank());
  for (int n = 1; n <= n_max; ++n) {
    try {
      power = compose(phi, power, length_cap);
    } catch (const CapExceededError&) {
      std::ostringstream msg;
      msg << "image length exceeded cap " << length_cap << " at power " << n;
      throw CapExceededError(msg.str(), n, length_cap);
    }
    std::size_t ln = 0;
    for (int i = 1; i <= phi.rank(); ++i) {
      ln = std::max(ln, power.image(i).length());
    }
    out.ln.push_back(ln);
    out.h_sequence.push_back(std::log(static_cast<double>(ln)) / n);
  }
  out.h_estimate = out.h_sequence.back();
  if (std::size_t l = max_sl_level(phi); l >= 1) {
    out.certified_lower = std::log(static_cast<double>(l) * phi.rank());
  }
  return out;
}

}  // namespace wagner
