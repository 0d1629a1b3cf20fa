#include "llab/fft.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace llab {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

}  // namespace

std::string_view to_string(DftMethod m) noexcept {
  return m == DftMethod::direct ? "direct" : "chirp_z";
}

cplx unit_root(std::uint64_t k, std::uint64_t N) {
  const long double angle = kTwoPi * static_cast<long double>(k % N) / static_cast<long double>(N);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::vector<cplx> unit_roots(std::uint64_t N) {
  std::vector<cplx> w(N);
  for (std::uint64_t k = 0; k < N; ++k) w[k] = unit_root(k, N);
  return w;
}

std::vector<cplx> dft_direct_serial(std::span<const cplx> x) {
  const std::uint64_t N = x.size();
  const std::vector<cplx> w = unit_roots(N);
  std::vector<cplx> out(N);
  for (std::uint64_t a = 0; a < N; ++a) {
    cplx acc = 0;
    std::uint64_t idx = 0;
    for (std::uint64_t n = 0; n < N; ++n) {
      acc += x[n] * w[idx];
      idx += a;
      if (idx >= N) idx -= N;
    }
    out[a] = acc;
  }
  return out;
}

std::vector<cplx> dft_direct(std::span<const cplx> x) {
  const std::uint64_t N = x.size();
  const std::vector<cplx> w = unit_roots(N);
  std::vector<cplx> out(N);
  const auto hi = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static)
  for (std::int64_t sa = 0; sa < hi; ++sa) {
    const auto a = static_cast<std::uint64_t>(sa);
    cplx acc = 0;
    std::uint64_t idx = 0;
    for (std::uint64_t n = 0; n < N; ++n) {
      acc += x[n] * w[idx];
      idx += a;
      if (idx >= N) idx -= N;
    }
    out[a] = acc;
  }
  return out;
}

void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("fft_pow2: size not a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles per index from the exact angle, never by repeated products.
  std::vector<cplx> roots(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const cplx w = unit_root(k, n);
    roots[k] = sign > 0 ? w : std::conj(w);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * roots[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
  }
}

std::vector<cplx> dft_chirp_z(std::span<const cplx> x) {
  const std::uint64_t N = x.size();
  if (N == 0) return {};
  const std::size_t M = std::bit_ceil(2 * N - 1);

  // chirp[n] = e(n²/(2N)), exponent reduced mod 2N in integers.
  std::vector<cplx> chirp(N);
  for (std::uint64_t n = 0; n < N; ++n) {
    const auto sq = static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * n) % (2 * N));
    chirp[n] = unit_root(sq, 2 * N);
  }

  std::vector<cplx> u(M, 0), v(M, 0);
  for (std::uint64_t n = 0; n < N; ++n) u[n] = x[n] * chirp[n];
  v[0] = std::conj(chirp[0]);
  for (std::uint64_t m = 1; m < N; ++m) v[m] = v[M - m] = std::conj(chirp[m]);

  fft_pow2(u, -1);
  fft_pow2(v, -1);
  for (std::size_t i = 0; i < M; ++i) u[i] *= v[i];
  fft_pow2(u, +1);

  std::vector<cplx> out(N);
  const double scale = 1.0 / static_cast<double>(M);
  for (std::uint64_t a = 0; a < N; ++a) out[a] = chirp[a] * u[a] * scale;
  return out;
}

std::vector<cplx> dft(std::span<const cplx> x, DftMethod* used) {
  const DftMethod m = x.size() <= kDirectDftLimit ? DftMethod::direct : DftMethod::chirp_z;
  if (used) *used = m;
  return m == DftMethod::direct ? dft_direct(x) : dft_chirp_z(x);
}

}  // namespace llab
