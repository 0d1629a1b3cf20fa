#include "llab/spectral.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "llab/parallel.hpp"

namespace llab {

namespace {

std::vector<cplx> liouville_signal(const ArithTable& table, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("spectrum: N must be >= 2");
  table.require(N - 1);
  std::vector<cplx> x(N, 0.0);
  for (std::uint64_t n = 1; n < N; ++n) x[n] = table.lambda(n);
  return x;
}

void check_defect_args(const Spectrum& spec, const ArithTable& table, std::uint64_t d) {
  if (d < 1 || std::gcd(d, spec.N) != 1)
    throw std::invalid_argument("dilation_defect: gcd(d, N) must be 1 (d=" + std::to_string(d) +
                                ", N=" + std::to_string(spec.N) + ")");
  table.require(d);
}

}  // namespace

Spectrum spectrum(const ArithTable& table, std::uint64_t N) {
  const auto x = liouville_signal(table, N);
  Spectrum s{N, {}, DftMethod::direct};
  s.coeffs = dft(x, &s.method);
  return s;
}

Spectrum spectrum_with(const ArithTable& table, std::uint64_t N, DftMethod method) {
  const auto x = liouville_signal(table, N);
  return {N, method == DftMethod::direct ? dft_direct(x) : dft_chirp_z(x), method};
}

double plancherel_mass(const Spectrum& spec) {
  const double total = deterministic_sum<double>(spec.N, [&](std::size_t a) {
    return std::norm(spec.coeffs[a]);
  });
  return total / static_cast<double>(spec.N);
}

double dilation_defect(const Spectrum& spec, const ArithTable& table, std::uint64_t d) {
  check_defect_args(spec, table, d);
  const double ld = table.lambda(d);
  const std::uint64_t N = spec.N;
  const double total = deterministic_sum<double>(N, [&](std::size_t a) {
    const auto da = static_cast<std::uint64_t>((static_cast<unsigned __int128>(d) * a) % N);
    return std::norm(spec.coeffs[da] - ld * spec.coeffs[a]);
  });
  return total / static_cast<double>(N);
}

double dilation_defect_serial(const Spectrum& spec, const ArithTable& table, std::uint64_t d) {
  check_defect_args(spec, table, d);
  const double ld = table.lambda(d);
  const std::uint64_t N = spec.N;
  const double total = deterministic_sum_serial<double>(N, [&](std::size_t a) {
    const auto da = static_cast<std::uint64_t>((static_cast<unsigned __int128>(d) * a) % N);
    return std::norm(spec.coeffs[da] - ld * spec.coeffs[a]);
  });
  return total / static_cast<double>(N);
}

}  // namespace llab
