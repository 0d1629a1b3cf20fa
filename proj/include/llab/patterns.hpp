#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "llab/arith.hpp"
#include "llab/index_set.hpp"

namespace llab {

/// Sign pattern counts of (λ(n), λ(N-n)) over 1 ≤ n < N.
struct PatternReport {
  std::uint64_t N = 0;
  std::int64_t corr = 0;  ///< Σ λ(n)λ(N-n)
  /// counts[i][j], index 0 for sign +1 and 1 for sign -1 (first λ(n), then λ(N-n)).
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  int eta_min = 1;
  std::uint64_t e_size = 0;

  std::uint64_t count(int eta1, int eta2) const noexcept {
    return counts[eta1 > 0 ? 0 : 1][eta2 > 0 ? 0 : 1];
  }
  /// |{n < N : λ(n)λ(N-n) = eta}|
  std::uint64_t agreement(int eta) const noexcept {
    return eta > 0 ? count(1, 1) + count(-1, -1) : count(1, -1) + count(-1, 1);
  }
};

PatternReport pattern_report(const ArithTable& table, std::uint64_t N);
PatternReport pattern_report_serial(const ArithTable& table, std::uint64_t N);

/// E(N) (d = 1, with its sign eta) or E_d(N) for d ≥ 2.
struct ExceptionalSet {
  std::uint64_t N = 0;
  std::uint64_t d = 1;
  int eta = 1;  ///< meaningful for d = 1 only
  IndexSet bits;

  std::uint64_t card() const noexcept { return bits.size(); }
};

/// E(N) = {n < N : λ(n)λ(N-n) = eta} for the minimising eta; ties go to +1.
ExceptionalSet exceptional_set_base(const ArithTable& table, std::uint64_t N);

enum class WitnessCase {
  eight_divides,  ///< 8 | N, lifted from 8 = 4 + 4 = 3 + 5
  half_split,     ///< λ(N) = +1, a = b = N/2
  odd_square,     ///< N = 2^k M² N', pair built from M² - d² and d²
  scan,           ///< ascending search over a
  none,
};

std::string_view to_string(WitnessCase c) noexcept;

/// a + b = N with λ(a) = λ(b) = -1. When nothing exists the result carries
/// N with case `none` and a = b = 0.
struct ShustermanWitness {
  std::uint64_t N = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  WitnessCase tag = WitnessCase::none;

  bool found() const noexcept { return tag != WitnessCase::none; }
};

ShustermanWitness shusterman_witness(const ArithTable& table, std::uint64_t N);

/// For odd M ≥ 11 returns the odd d = M - 2n (smallest n ≥ 1) with
/// λ(n) = λ(M - n), so that λ(M² - d²) = λ(d²) = +1.
/// Throws AssertionFailure if no n < M/2 qualifies.
std::uint64_t square_pattern_witness(const ArithTable& table, std::uint64_t M);

}  // namespace llab
