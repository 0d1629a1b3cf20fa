#pragma once

#include <cstdint>
#include <vector>

#include "llab/arith.hpp"
#include "llab/fft.hpp"

namespace llab {

/// coeffs[a] = S_λ(a/N) = Σ_{0<n<N} λ(n)·e(na/N), a = 0..N-1.
struct Spectrum {
  std::uint64_t N = 0;
  std::vector<cplx> coeffs;
  DftMethod method = DftMethod::direct;
};

Spectrum spectrum(const ArithTable& table, std::uint64_t N);
Spectrum spectrum_with(const ArithTable& table, std::uint64_t N, DftMethod method);

/// (1/N)·Σ_a |coeffs[a]|²; equals N-1 up to rounding.
double plancherel_mass(const Spectrum& spec);

/// (1/N)·Σ_a |S_λ(da/N) - λ(d)·S_λ(a/N)|², which equals 4|E_d(N)|.
/// Throws std::invalid_argument when gcd(d, N) > 1.
double dilation_defect(const Spectrum& spec, const ArithTable& table, std::uint64_t d);
double dilation_defect_serial(const Spectrum& spec, const ArithTable& table, std::uint64_t d);

/// Tolerance used for defect and Plancherel identities: 1e-6·N.
inline double spectral_tolerance(std::uint64_t N) { return 1e-6 * static_cast<double>(N); }

}  // namespace llab
