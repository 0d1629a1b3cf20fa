#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "llab/arith.hpp"
#include "llab/patterns.hpp"
#include "llab/report.hpp"

namespace llab {

/// φ_d(n) = d·n mod N taken in (0, N). Throws std::invalid_argument if the
/// residue is 0 or n is outside [1, N).
std::uint64_t phi(std::uint64_t d, std::uint64_t n, std::uint64_t N);

/// Binds a modulus to a table big enough for every dilation up to d_max:
/// construction throws TableTooSmall unless n_max ≥ d_max·(N-1).
class DilationContext {
 public:
  DilationContext(const ArithTable& table, std::uint64_t N, std::uint64_t d_max);

  const ArithTable& table() const noexcept { return *table_; }
  std::uint64_t modulus() const noexcept { return N_; }
  std::uint64_t d_max() const noexcept { return d_max_; }

  /// E(N) with its sign; computed once on construction.
  const ExceptionalSet& base() const noexcept { return base_; }

  /// Validates gcd(d, N) = 1 and d·(N-1) ≤ n_max.
  void require(std::uint64_t d) const;

 private:
  const ArithTable* table_;
  std::uint64_t N_;
  std::uint64_t d_max_;
  ExceptionalSet base_;
};

/// Λ_d(n) = λ(dn)·λ(φ_d(n)).
int lambda_pair(const DilationContext& ctx, std::uint64_t d, std::uint64_t n);

ExceptionalSet exceptional_set_d(const DilationContext& ctx, std::uint64_t d);
ExceptionalSet exceptional_set_d_serial(const DilationContext& ctx, std::uint64_t d);

/// φ_d^{-1}(S) = {n : φ_d(n) ∈ S}.
IndexSet preimage(const IndexSet& s, std::uint64_t d);

/// True iff φ_d permutes {1, ..., N-1} (image counting).
bool phi_is_bijection(std::uint64_t d, std::uint64_t N);

struct GRatio {
  std::uint64_t num = 0;  ///< |E_d(N)|
  std::uint64_t den = 0;  ///< |E(N)|
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// g(d) = |E_d(N)| / |E(N)|; throws UndefinedRatio when E(N) is empty.
GRatio g_ratio(const DilationContext& ctx, std::uint64_t d);

/// Checks E_ab = E_b △ φ_b^{-1}(E_a), the reciprocity
/// E_a △ φ_a^{-1}(E_b) = E_b △ φ_b^{-1}(E_a), and
/// |E_b △ φ_a^{-1}(E_b)| ≤ 2|E_a|. lhs/rhs carry the inequality.
VerificationReport verify_symdiff(const DilationContext& ctx, std::uint64_t a, std::uint64_t b);

/// g(m_1⋯m_k) ≤ k·Σ g(m_i), compared as |E_{Πm}| ≤ k·Σ|E_{m_i}|.
VerificationReport verify_subadditivity(const DilationContext& ctx,
                                        std::span<const std::uint64_t> factors);

/// g(R) ≤ Ω(R)·Σ_{q^k || R} k·g(q), compared on cardinalities.
VerificationReport verify_composite_bound(const DilationContext& ctx, std::uint64_t R);

}  // namespace llab
