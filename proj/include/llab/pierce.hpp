#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "llab/dilation.hpp"
#include "llab/report.hpp"

namespace llab {

/// θ(n) = N - n·⌊N/n⌋. Throws std::invalid_argument for n = 0.
std::uint64_t theta(std::uint64_t n, std::uint64_t N);

/// Greedy Pierce digits of n/N truncated at the first digit ≥ p.
struct PierceSignature {
  std::uint64_t N = 0;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> digits;      ///< r_1 < ... < r_k, all < p
  std::vector<std::uint64_t> trajectory;  ///< n_0 = n, ..., n_k with n_{j+1} = N - r_{j+1}·n_j

  std::size_t k() const noexcept { return digits.size(); }
  std::uint64_t residual() const noexcept { return trajectory.back(); }
};

PierceSignature p_signature(std::uint64_t n, std::uint64_t N, std::uint64_t p);

/// Exact value of N·Σ_{j≤k} (-1)^{j-1}/(r_1⋯r_j) + residual·(-1)^k/(r_1⋯r_k),
/// held as a reduced fraction in 128-bit integers.
struct Reconstruction {
  __int128 num = 0;
  __int128 den = 1;
  bool integral = false;   ///< den == 1
  bool in_range = false;   ///< integral and 0 < value < N

  std::int64_t value() const noexcept { return static_cast<std::int64_t>(num); }
};

/// Throws std::invalid_argument for non-increasing or zero digits and
/// std::overflow_error when the digit product leaves the 128-bit range.
Reconstruction reconstruct(std::span<const std::uint64_t> digits, std::uint64_t residual,
                           std::uint64_t N);

/// Λ_p(n) against Π_j Λ_{r_j}(φ_p(n_{j-1})) for every n < N.
struct ProductFormulaResult {
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  std::uint64_t failures = 0;
  std::uint64_t budget = 0;                   ///< 2p·|E(N)|
  std::vector<std::uint64_t> failing_sample;  ///< first few failing n
  /// Failures whose trajectory never meets E(N) through r_j·n_{j-1} or
  /// φ_p(n_j); filled only with diagnosis on. Always expected to be 0.
  std::uint64_t unexplained = 0;
};

ProductFormulaResult product_formula(const DilationContext& ctx, std::uint64_t p, bool diagnose);

VerificationReport verify_product_formula(const DilationContext& ctx, std::uint64_t p,
                                          bool diagnose = false);

enum class NuMode { subset_oracle, trajectory_scan };

inline constexpr std::uint64_t kSubsetOracleMaxDigit = 22;

/// ν_r(m) for every m with N/(r+1) < m < N/r.
struct NuStats {
  std::uint64_t N = 0;
  std::uint64_t r = 0;
  std::uint64_t m_lo = 0;             ///< smallest m in the interval
  std::vector<std::uint64_t> values;  ///< values[i] = ν_r(m_lo + i)
  std::uint64_t moment = 0;

  std::uint64_t at(std::uint64_t m) const { return values.at(m - m_lo); }
  std::uint64_t max_value() const noexcept;
};

/// subset_oracle enumerates digit subsets of {1..r-1} (requires r ≤ 22,
/// else UnsupportedMode); trajectory_scan walks every θ-trajectory.
NuStats nu_compute(std::uint64_t N, std::uint64_t r, NuMode mode);

/// ν_r for r = 1..r_max from one pass over all trajectories.
std::vector<NuStats> nu_scan_all(std::uint64_t N, std::uint64_t r_max);
std::vector<NuStats> nu_scan_all_serial(std::uint64_t N, std::uint64_t r_max);

/// Bound on moment·r/(N·log r), frozen from the N = 997, r ≤ 50 run
/// (observed maximum 1.2094).
inline constexpr double kNuMomentConstant = 1.21;

struct NuMomentRow {
  std::uint64_t N = 0;
  std::uint64_t r = 0;
  std::uint64_t moment = 0;
  double ratio = 0.0;  ///< moment·r/(N·log r)
  bool flagged = false;
};

std::vector<NuMomentRow> nu_moment_sweep(std::uint64_t N, std::uint64_t r_max);

}  // namespace llab
