#pragma once

#include <cstdint>
#include <vector>

#include "llab/arith.hpp"
#include "llab/fft.hpp"
#include "llab/report.hpp"

namespace llab {

/// Dirichlet characters mod a prime N through discrete logarithms:
/// χ_j(n) = e(j·ind(n)/(N-1)).
class CharacterTable {
 public:
  std::uint64_t modulus() const noexcept { return N_; }
  std::uint64_t root() const noexcept { return root_; }
  std::uint64_t order() const noexcept { return N_ - 1; }

  /// ind(g^j mod N) = j; n must be in [1, N).
  std::uint64_t ind(std::uint64_t n) const noexcept { return ind_[n]; }
  /// g^j mod N for 0 ≤ j < N-1.
  std::uint64_t power(std::uint64_t j) const noexcept { return pow_[j]; }

  /// χ_j(n); zero when N | n.
  cplx chi(std::uint64_t j, std::uint64_t n) const;

 private:
  friend CharacterTable build_characters(std::uint64_t N);

  std::uint64_t N_ = 0;
  std::uint64_t root_ = 0;
  std::vector<std::uint64_t> ind_;
  std::vector<std::uint64_t> pow_;
};

/// Uses the smallest primitive root. Throws std::invalid_argument unless N is prime.
CharacterTable build_characters(std::uint64_t N);

/// Σ_{n<N} λ(n)·χ_j(n) by direct summation.
cplx twisted_sum(const CharacterTable& ct, const ArithTable& table, std::uint64_t j);

/// All twisted sums at once: a length N-1 transform of t ↦ λ(g^t).
std::vector<cplx> twisted_sums(const CharacterTable& ct, const ArithTable& table);

/// Largest |(1/(N-1))·Σ_j χ_j(a)·conj χ_j(b) - [a = b]| over all a, b.
double orthogonality_error(const CharacterTable& ct);

/// Two sides of the averaged identity
///   (1/π̃(P))·Σ_{p∼P} |E_p(N)|
///     = ½(N-1) - (1/(2(N-1)))·Σ_χ [(1/π̃(P))·Σ_{p∼P} λ(p)·conj χ(p)]·|Σ_{n<N} λ(n)χ(n)|²
/// with p ∼ P meaning P < p ≤ 2P. Tolerance 1e-6·N.
struct EpDecomposition {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_imag = 0.0;          ///< should cancel to ~0
  double principal_term = 0.0;    ///< j = 0 contribution to the character sum
  std::vector<std::uint64_t> primes;
};

EpDecomposition ep_decomposition(const CharacterTable& ct, const ArithTable& table, std::uint64_t P);

VerificationReport verify_ep_decomposition(const CharacterTable& ct, const ArithTable& table,
                                           std::uint64_t P);

}  // namespace llab
