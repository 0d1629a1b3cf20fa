#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "llab/arith.hpp"
#include "llab/dilation.hpp"
#include "llab/fft.hpp"
#include "llab/index_set.hpp"
#include "llab/report.hpp"

namespace llab {

/// Σ_{n ∈ set} e(kn/N).
cplx exp_sum_over_set(const IndexSet& set, std::uint64_t k);

/// Per-a form of the friable averaging step: for g(n) = e(kn/N) and every
/// a ∈ S(T, q),
///   |Σ_{n∈E_b} g(n) - Σ_{n∈E_b} g(an)| ≤ 2|E_a(N)|.
/// lhs/rhs report the worst ratio difference/(2|E_a|) against 1.
struct FriableAverageResult {
  std::uint64_t worst_a = 1;
  double worst_ratio = 0.0;      ///< max over a with E_a ≠ ∅ of difference/(2|E_a|)
  double max_difference = 0.0;
  double averaged_difference = 0.0;  ///< |Σ g(n) - Σ_n (1/Ψ)Σ_a g(an)|
  std::uint64_t violations = 0;
  std::uint64_t psi = 0;
};

FriableAverageResult friable_average(const DilationContext& ctx, std::uint64_t b, std::uint64_t T,
                                     std::uint64_t q, std::uint64_t k);

VerificationReport friable_average_check(const DilationContext& ctx, std::uint64_t b,
                                         std::uint64_t T, std::uint64_t q, std::uint64_t k);

/// Anchored star discrepancy sup_t |#{x < t}/n - t| of the points n/N.
/// Throws UndefinedDiscrepancy for an empty set.
double star_discrepancy(const IndexSet& set);
double star_discrepancy(std::vector<double> points);

/// sup over all subintervals I ⊆ [0,1] of |#{x ∈ I}/n - |I||, points in (0,1).
double interval_discrepancy(const IndexSet& set);
double interval_discrepancy(std::vector<double> points);

inline constexpr double kErdosTuranConstant = 3.0;

/// C_ET·(|set|/K + Σ_{k≤K} |exp_sum(k)|/k) / |set|.
double erdos_turan_bound(const IndexSet& set, std::uint64_t K);

struct DiscrepancyReport {
  std::uint64_t N = 0;
  std::uint64_t b = 0;  ///< set id: E_b(N)
  std::uint64_t card = 0;
  double star = 0.0;
  double interval = 0.0;
  double et_bound = 0.0;
  std::uint64_t K = 0;
  std::vector<double> exp_sums;  ///< |Σ e(kn/N)| for k = 1..K
};

DiscrepancyReport discrepancy_report(const IndexSet& set, std::uint64_t b, std::uint64_t K);

struct FriableProfileEntry {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  double magnitude = 0.0;  ///< |(1/Ψ)·Σ_{a∈S(T,q)} e(kan/N)|
};

/// Report only; nothing is asserted.
std::vector<FriableProfileEntry> friable_exp_sum_profile(
    const FriableSet& fs, std::uint64_t N,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples);

}  // namespace llab
