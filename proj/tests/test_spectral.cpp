#include <doctest.h>

#include <numeric>
#include <random>

#include "llab/dilation.hpp"
#include "llab/fft.hpp"
#include "llab/spectral.hpp"
#include "oracle.hpp"

using namespace llab;

namespace {

std::vector<cplx> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> x(n);
  for (auto& v : x) v = {u(rng), u(rng)};
  return x;
}

double max_error(const std::vector<cplx>& a, const std::vector<std::complex<long double>>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    e = std::max(e, static_cast<double>(std::abs(std::complex<long double>(a[i]) - b[i])));
  return e;
}

}  // namespace

TEST_CASE("unit roots") {
  CHECK(unit_root(0, 7) == cplx(1, 0));
  CHECK(std::abs(unit_root(1, 4) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(unit_root(11, 4) - cplx(0, -1)) < 1e-15);
  const auto roots = unit_roots(97);
  for (std::uint64_t k = 0; k < 97; ++k) CHECK(std::abs(roots[k] - unit_root(k, 97)) == 0.0);
}

TEST_CASE("transforms agree with the long double oracle") {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 97u, 257u, 1000u}) {
    const auto x = random_signal(n, n);
    const auto ref = oracle::dft(x);
    const double tol = 1e-10 * static_cast<double>(n);
    CHECK(max_error(dft_direct(x), ref) < tol);
    CHECK(max_error(dft_direct_serial(x), ref) < tol);
    CHECK(max_error(dft_chirp_z(x), ref) < tol);
  }
}

TEST_CASE("direct and chirp-z agree at larger lengths") {
  for (std::size_t n : {4099u, 10007u}) {
    const auto x = random_signal(n, 7);
    const auto a = dft_direct(x), b = dft_chirp_z(x), c = dft_direct_serial(x);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      e = std::max(e, std::abs(a[i] - b[i]));
      REQUIRE(a[i] == c[i]);
    }
    CHECK(e < 1e-8 * static_cast<double>(n));
  }
}

TEST_CASE("dispatcher and radix-2 transform") {
  DftMethod m;
  dft(random_signal(100, 1), &m);
  CHECK(m == DftMethod::direct);
  dft(random_signal(kDirectDftLimit + 1, 1), &m);
  CHECK(m == DftMethod::chirp_z);
  CHECK(to_string(DftMethod::chirp_z) == "chirp_z");

  auto x = random_signal(64, 3);
  auto y = x;
  fft_pow2(y, 1);
  fft_pow2(y, -1);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(y[i] / 64.0 - x[i]) < 1e-13);
  std::vector<cplx> bad(12);
  CHECK_THROWS_AS(fft_pow2(bad, 1), std::invalid_argument);
}

TEST_CASE("spectrum at N=11") {
  const ArithTable t = build_table(200);
  const Spectrum s = spectrum(t, 11);
  CHECK(std::abs(s.coeffs[0]) < 1e-12);
  for (std::uint64_t a = 1; a < 11; ++a) CHECK(std::abs(s.coeffs[11 - a] - std::conj(s.coeffs[a])) < 1e-12);
  CHECK(plancherel_mass(s) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(dilation_defect(s, t, 1) == 0.0);
  CHECK(dilation_defect(s, t, 2) == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(dilation_defect(s, t, 4) == doctest::Approx(32.0).epsilon(1e-12));
  CHECK_THROWS_AS(dilation_defect(spectrum(t, 12), t, 2), std::invalid_argument);
}

TEST_CASE("defect identity against exceptional sets") {
  const ArithTable t = build_table(20 * 1200);
  for (std::uint64_t N : {13u, 101u, 512u, 997u, 1009u, 1155u}) {
    const Spectrum s = spectrum(t, N);
    const DilationContext ctx(t, N, 20);
    const double tol = spectral_tolerance(N);
    CHECK(std::abs(plancherel_mass(s) - static_cast<double>(N - 1)) <= tol);
    for (std::uint64_t d = 2; d <= 20; ++d) {
      if (std::gcd(d, N) != 1) continue;
      const double defect = dilation_defect(s, t, d);
      REQUIRE(std::abs(defect - dilation_defect_serial(s, t, d)) <= tol);
      REQUIRE(std::abs(defect - 4.0 * static_cast<double>(exceptional_set_d(ctx, d).card())) <= tol);
    }
  }
}

TEST_CASE("dilation permutes coefficient magnitudes") {
  const ArithTable t = build_table(1000);
  const std::uint64_t N = 101;
  const Spectrum s = spectrum(t, N);
  for (std::uint64_t d : {2u, 3u, 7u}) {
    std::vector<double> a, b;
    for (std::uint64_t k = 0; k < N; ++k) {
      a.push_back(std::abs(s.coeffs[k]));
      b.push_back(std::abs(s.coeffs[d * k % N]));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
}

TEST_CASE("fast path spectrum matches direct evaluation") {
  const std::uint64_t N = 20011;
  const ArithTable t = build_table(3 * N);
  const Spectrum fast = spectrum(t, N);
  CHECK(fast.method == DftMethod::chirp_z);
  const Spectrum slow = spectrum_with(t, N, DftMethod::direct);
  double e = 0.0;
  for (std::uint64_t a = 0; a < N; ++a) e = std::max(e, std::abs(fast.coeffs[a] - slow.coeffs[a]));
  CHECK(e < 1e-6);
  const DilationContext ctx(t, N, 3);
  for (std::uint64_t d : {2u, 3u})
    CHECK(std::abs(dilation_defect(fast, t, d) -
                   4.0 * static_cast<double>(exceptional_set_d(ctx, d).card())) <=
          spectral_tolerance(N));
}
