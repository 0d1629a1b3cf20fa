#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace llab {

/// Largest sieve bound accepted by build_table.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 31;

/// Sieve-backed λ(n), Ω(n) and P⁺(n) for 1 ≤ n ≤ n_max. Immutable after
/// construction, so concurrent reads are safe.
class ArithTable {
 public:
  ArithTable() = default;

  std::uint64_t n_max() const noexcept { return n_max_; }

  /// Unchecked accessors; index 0 is a placeholder.
  int lambda(std::uint64_t n) const noexcept { return lambda_[n]; }
  unsigned omega(std::uint64_t n) const noexcept { return omega_[n]; }
  std::uint32_t pplus(std::uint64_t n) const noexcept { return pplus_[n]; }
  bool is_prime(std::uint64_t n) const noexcept { return n >= 2 && pplus_[n] == n; }

  std::span<const std::int8_t> lambdas() const noexcept { return lambda_; }

  /// Throws TableTooSmall unless n ≤ n_max.
  void require(std::uint64_t n) const;

 private:
  friend ArithTable build_table(std::uint64_t n_max);
  friend ArithTable load_table(const std::filesystem::path& path);

  std::uint64_t n_max_ = 0;
  std::vector<std::int8_t> lambda_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint32_t> pplus_;
};

/// Linear smallest-prime-factor sieve. Throws std::invalid_argument for
/// n_max = 0 or n_max > kMaxTableSize.
ArithTable build_table(std::uint64_t n_max);

struct ArithValue {
  int lambda;
  unsigned omega;
  std::uint32_t pplus;

  bool operator==(const ArithValue&) const = default;
};

/// Checked lookup of (λ(n), Ω(n), P⁺(n)).
ArithValue arith_query(const ArithTable& table, std::uint64_t n);

/// q-friable integers in [1, T]; 1 is always a member.
struct FriableSet {
  std::uint64_t T = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> members;

  std::uint64_t psi() const noexcept { return members.size(); }
};

FriableSet friable_enumerate(const ArithTable& table, std::uint64_t T, std::uint64_t q);

/// Primes p with P < p ≤ 2P.
std::vector<std::uint64_t> primes_between(const ArithTable& table, std::uint64_t P);

/// Primes in [lo, hi] taken from the sieve.
std::vector<std::uint64_t> primes_in_range(const ArithTable& table, std::uint64_t lo,
                                           std::uint64_t hi);

/// Trial-division primality test, usable without a table.
bool is_prime_u64(std::uint64_t n);

/// Prime factorisation via the P⁺ table, as (prime, exponent) ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(const ArithTable& table,
                                                          std::uint64_t n);

// Binary cache. Layout, all little-endian:
//   8 bytes magic "LLABARTH", u32 version, u64 n_max,
//   ceil(n_max/8) bytes of λ bits (bit n-1 set iff λ(n) = -1),
//   n_max bytes of Ω, n_max u32 of P⁺.
inline constexpr std::uint32_t kTableCacheVersion = 1;

void save_table(const ArithTable& table, const std::filesystem::path& path);
ArithTable load_table(const std::filesystem::path& path);

}  // namespace llab
