#include <doctest.h>

#include <numbers>

#include "llab/characters.hpp"
#include "llab/dilation.hpp"
#include "oracle.hpp"

using namespace llab;

TEST_CASE("primitive roots and discrete logs") {
  CHECK(build_characters(7).root() == 3);
  CHECK(build_characters(11).root() == 2);
  CHECK(build_characters(2).root() == 1);
  for (std::uint64_t N : {3u, 5u, 11u, 101u, 997u}) {
    const CharacterTable ct = build_characters(N);
    CHECK(ct.ind(1) == 0);
    std::uint64_t x = 1;
    for (std::uint64_t j = 0; j < N - 1; ++j) {
      REQUIRE(ct.power(j) == x);
      REQUIRE(ct.ind(x) == j);
      x = x * ct.root() % N;
    }
    REQUIRE(x == 1);
  }
  CHECK_THROWS_AS(build_characters(12), std::invalid_argument);
  CHECK_THROWS_AS(build_characters(1), std::invalid_argument);
}

TEST_CASE("characters are multiplicative and orthogonal") {
  const CharacterTable ct = build_characters(31);
  for (std::uint64_t j = 0; j < 30; ++j) {
    CHECK(ct.chi(j, 31) == cplx(0, 0));
    for (std::uint64_t a = 1; a < 31; ++a)
      for (std::uint64_t b = 1; b < 31; ++b)
        REQUIRE(std::abs(ct.chi(j, a * b % 31) - ct.chi(j, a) * ct.chi(j, b)) < 1e-12);
  }
  CHECK(orthogonality_error(ct) < 1e-12);
  CHECK(orthogonality_error(build_characters(101)) < 1e-12);
}

TEST_CASE("twisted sums") {
  const ArithTable t = build_table(2000);
  const CharacterTable c11 = build_characters(11);
  CHECK(std::abs(twisted_sum(c11, t, 0)) < 1e-12);
  for (std::uint64_t N : {11u, 101u, 499u}) {
    const CharacterTable ct = build_characters(N);
    const auto all = twisted_sums(ct, t);
    double parseval = 0.0;
    for (std::uint64_t j = 0; j < N - 1; ++j) {
      // Term-by-term oracle using an independent angle computation.
      std::complex<long double> s = 0;
      for (std::uint64_t n = 1; n < N; ++n)
        s += static_cast<long double>(oracle::liouville(n)) *
             std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> *
                                  static_cast<long double>(j * ct.ind(n) % (N - 1)) /
                                  static_cast<long double>(N - 1));
      REQUIRE(std::abs(std::complex<long double>(all[j]) - s) < 1e-9L);
      REQUIRE(std::abs(all[j] - twisted_sum(ct, t, j)) < 1e-9);
      REQUIRE(std::abs(all[j] - std::conj(all[(N - 1 - j) % (N - 1)])) < 1e-9);
      parseval += std::norm(all[j]);
    }
    CHECK(parseval == doctest::Approx(static_cast<double>((N - 1) * (N - 1))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(twisted_sum(c11, t, 10), std::invalid_argument);
}

TEST_CASE("averaged dilation identity through characters") {
  const ArithTable t = build_table(100000);
  {
    const CharacterTable ct = build_characters(11);
    const EpDecomposition ep = ep_decomposition(ct, t, 3);
    CHECK(ep.primes == std::vector<std::uint64_t>{5});
    CHECK(ep.lhs == 6.0);
    CHECK(std::abs(ep.rhs - 6.0) < 1e-9);
    CHECK(std::abs(ep.rhs_imag) < 1e-9);
    // Σ λ(n) = 0 at N = 11, so the principal character contributes nothing.
    CHECK(std::abs(ep.principal_term) < 1e-12);
  }
  {
    const CharacterTable ct = build_characters(13);
    const EpDecomposition ep = ep_decomposition(ct, t, 5);
    CHECK(ep.primes == std::vector<std::uint64_t>{7});
    CHECK(ep.lhs == doctest::Approx(ep.rhs).epsilon(1e-10));
    const DilationContext ctx(t, 13, 7);
    CHECK(ep.lhs == static_cast<double>(exceptional_set_d(ctx, 7).card()));
  }
  for (std::uint64_t N : {101u, 499u, 997u})
    for (std::uint64_t P : {3u, 10u, 20u}) {
      const VerificationReport r = verify_ep_decomposition(build_characters(N), t, P);
      CHECK(r.pass);
      CHECK(r.check_id == "character_decomposition");
      CHECK(std::abs(r.lhs - r.rhs) <= 1e-6 * static_cast<double>(N));
    }
  CHECK_THROWS_AS(ep_decomposition(build_characters(5), t, 3), std::invalid_argument);
}
