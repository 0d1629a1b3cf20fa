#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace llab {

using cplx = std::complex<double>;

/// Lengths up to this use the direct O(N²) sum; longer ones use chirp-z.
inline constexpr std::size_t kDirectDftLimit = std::size_t{1} << 14;

enum class DftMethod { direct, chirp_z };

std::string_view to_string(DftMethod m) noexcept;

/// e(k/N) = exp(2πi·k/N), with k reduced mod N exactly before the angle is
/// formed in extended precision.
cplx unit_root(std::uint64_t k, std::uint64_t N);

/// Table of e(k/N) for k = 0..N-1.
std::vector<cplx> unit_roots(std::uint64_t N);

// All transforms compute X[a] = Σ_n x[n]·e(na/N) (positive exponent, unscaled).

std::vector<cplx> dft_direct(std::span<const cplx> x);
std::vector<cplx> dft_direct_serial(std::span<const cplx> x);

/// Bluestein: any length via a power-of-two circular convolution.
std::vector<cplx> dft_chirp_z(std::span<const cplx> x);

/// Chooses direct or chirp-z by length; reports the choice through `used`.
std::vector<cplx> dft(std::span<const cplx> x, DftMethod* used = nullptr);

/// In-place radix-2 transform; size must be a power of two. sign = +1 or -1
/// selects e(±jk/M); no scaling.
void fft_pow2(std::vector<cplx>& a, int sign);

}  // namespace llab
