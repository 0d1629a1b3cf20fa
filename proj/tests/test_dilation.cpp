#include <doctest.h>

#include <numeric>

#include "llab/dilation.hpp"
#include "llab/error.hpp"
#include "oracle.hpp"

using namespace llab;

namespace {

std::set<std::uint64_t> as_set(const IndexSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(2, 6, 11) == 1);
  for (std::uint64_t n = 1; n < 11; ++n) CHECK(phi(1, n, 11) == n);
  for (std::uint64_t d = 2; d < 7; ++d)
    for (std::uint64_t n = 1; d * n < 37; ++n) CHECK(phi(d, n, 37) == d * n);
  CHECK_THROWS_AS(phi(2, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(phi(2, 0, 11), std::invalid_argument);
  CHECK_THROWS_AS(phi(2, 11, 11), std::invalid_argument);
}

TEST_CASE("phi is a bijection exactly when gcd(d, N) = 1") {
  for (std::uint64_t N = 3; N <= 60; ++N)
    for (std::uint64_t d = 1; d <= 20; ++d)
      CHECK(phi_is_bijection(d, N) == (std::gcd(d, N) == 1));
}

TEST_CASE("phi composes") {
  for (std::uint64_t N : {11u, 13u, 35u, 101u})
    for (std::uint64_t a = 1; a <= 9; ++a)
      for (std::uint64_t b = 1; b <= 9; ++b) {
        if (std::gcd(a * b, N) != 1) continue;
        for (std::uint64_t n = 1; n < N; ++n) REQUIRE(phi(a * b, n, N) == phi(a, phi(b, n, N), N));
      }
}

TEST_CASE("lambda_pair and E_d(11)") {
  const ArithTable t = build_table(1000);
  const DilationContext ctx(t, 11, 8);
  CHECK(lambda_pair(ctx, 2, 6) == -1);
  for (std::uint64_t n = 1; n < 11; ++n) CHECK(lambda_pair(ctx, 1, n) == 1);
  for (std::uint64_t d = 2; d <= 8; ++d)
    for (std::uint64_t n = 1; d * n < 11; ++n) CHECK(lambda_pair(ctx, d, n) == 1);

  CHECK(exceptional_set_d(ctx, 1).bits.empty());
  CHECK(exceptional_set_d(ctx, 2).bits.members() == std::vector<std::uint64_t>{6, 7, 8, 10});
  CHECK(exceptional_set_d(ctx, 4).card() == 8);
  CHECK(exceptional_set_d(ctx, 3).bits.members() == std::vector<std::uint64_t>{4, 8});
  CHECK(exceptional_set_d(ctx, 5).card() == 6);
  const GRatio g = g_ratio(ctx, 2);
  CHECK(g.num == 4);
  CHECK(g.den == 4);
  CHECK(g.value() == 1.0);
}

TEST_CASE("E_d(N) against brute force, parallel and serial") {
  const ArithTable t = build_table(20 * 700);
  for (std::uint64_t N = 5; N <= 700; N += 13) {
    const DilationContext ctx(t, N, 20);
    for (std::uint64_t d = 1; d <= 20; ++d) {
      if (std::gcd(d, N) != 1) continue;
      const ExceptionalSet par = exceptional_set_d(ctx, d);
      const ExceptionalSet ser = exceptional_set_d_serial(ctx, d);
      REQUIRE(par.bits == ser.bits);
      REQUIRE(as_set(par.bits) == oracle::exceptional(N, d));
      const std::uint64_t lo = par.bits.min_member();
      REQUIRE((lo == 0 || d * lo >= N));
    }
  }
}

TEST_CASE("context contract") {
  const ArithTable t = build_table(100);
  CHECK_THROWS_AS(DilationContext(t, 11, 20), TableTooSmall);
  const DilationContext ctx(t, 10, 9);
  CHECK_THROWS_AS(exceptional_set_d(ctx, 2), std::invalid_argument);
  CHECK_THROWS_AS(exceptional_set_d(ctx, 13), TableTooSmall);
  CHECK_NOTHROW(exceptional_set_d(ctx, 3));
}

TEST_CASE("g ratio needs a nonempty E(N)") {
  const ArithTable t = build_table(1000);
  bool saw_empty = false;
  for (std::uint64_t N = 3; N < 11; ++N) {
    const DilationContext ctx(t, N, 2);
    if (ctx.base().card() == 0) {
      saw_empty = true;
      CHECK_THROWS_AS(g_ratio(ctx, 1), UndefinedRatio);
    }
  }
  CHECK(saw_empty);
}

TEST_CASE("preimage") {
  IndexSet s(11);
  s.insert(1);
  s.insert(5);
  const IndexSet p = preimage(s, 2);
  for (std::uint64_t n = 1; n < 11; ++n) CHECK(p.contains(n) == s.contains(phi(2, n, 11)));
  CHECK(p.size() == 2);
}

TEST_CASE("symmetric difference identities") {
  const ArithTable t = build_table(144 * 500);
  for (auto [N, a, b] : {std::tuple{11u, 2u, 3u}, std::tuple{13u, 2u, 5u}, std::tuple{11u, 3u, 3u}}) {
    const DilationContext ctx(t, N, a * b);
    const VerificationReport r = verify_symdiff(ctx, a, b);
    CHECK(r.pass);
    CHECK(r.check_id == "symdiff_reciprocity");
    CHECK(r.input("composition_ok") == 1);
    CHECK(r.input("reciprocity_ok") == 1);
  }
  // Independent check of the three statements with std::set algebra.
  for (std::uint64_t N : {11u, 23u, 101u, 499u}) {
    const DilationContext ctx(t, N, 144);
    for (std::uint64_t a = 2; a <= 12; ++a)
      for (std::uint64_t b = 2; b <= 12; ++b) {
        if (std::gcd(a * b, N) != 1) continue;
        auto Ea = oracle::exceptional(N, a), Eb = oracle::exceptional(N, b);
        auto pre = [&](const std::set<std::uint64_t>& S, std::uint64_t d) {
          std::set<std::uint64_t> out;
          for (std::uint64_t n = 1; n < N; ++n)
            if (S.count(d * n % N)) out.insert(n);
          return out;
        };
        auto sym = [](const std::set<std::uint64_t>& x, const std::set<std::uint64_t>& y) {
          std::set<std::uint64_t> out;
          std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                        std::inserter(out, out.end()));
          return out;
        };
        REQUIRE(oracle::exceptional(N, a * b) == sym(Eb, pre(Ea, b)));
        REQUIRE(sym(Ea, pre(Eb, a)) == sym(Eb, pre(Ea, b)));
        REQUIRE(sym(Eb, pre(Eb, a)).size() <= 2 * Ea.size());
        REQUIRE(verify_symdiff(ctx, a, b).pass);
      }
  }
  const DilationContext ctx(t, 11, 4);
  CHECK_THROWS_AS(verify_symdiff(ctx, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_symdiff(ctx, 2, 11), std::invalid_argument);
  const ArithTable small = build_table(40);
  const DilationContext tight(small, 11, 4);
  CHECK_THROWS_AS(verify_symdiff(tight, 3, 3), TableTooSmall);
}

TEST_CASE("subadditivity and composite bound") {
  const ArithTable t = build_table(30 * 1000);
  const DilationContext c11(t, 11, 30);
  const std::uint64_t two_two[] = {2, 2};
  const VerificationReport r = verify_subadditivity(c11, two_two);
  CHECK(r.pass);
  CHECK(r.lhs == 8.0);
  CHECK(r.rhs == 16.0);
  const std::uint64_t single[] = {7};
  const VerificationReport s = verify_subadditivity(c11, single);
  CHECK(s.pass);
  CHECK(s.lhs == s.rhs);
  const std::uint64_t bad[] = {1, 2};
  CHECK_THROWS_AS(verify_subadditivity(c11, bad), std::invalid_argument);

  for (std::uint64_t N : {11u, 101u, 997u}) {
    const DilationContext ctx(t, N, 30);
    for (std::uint64_t R : {4u, 6u, 8u, 9u, 12u, 16u, 18u, 24u, 27u, 30u})
      CHECK(verify_composite_bound(ctx, R).pass);
  }
}

TEST_CASE("dilation bounds on primes") {
  const ArithTable t = build_table(64 * 2000);
  for (std::uint64_t N = 11; N <= 2000; ++N) {
    if (!oracle::prime(N)) continue;
    const DilationContext ctx(t, N, 8);
    const std::uint64_t e = ctx.base().card();
    REQUIRE(e >= 1);
    REQUIRE(exceptional_set_d(ctx, 2).card() <= 2 * e);
    REQUIRE(exceptional_set_d(ctx, 3).card() <= 6 * e);
    for (std::uint64_t d = 2; d <= 8; ++d)
      REQUIRE(static_cast<double>(exceptional_set_d(ctx, d).card()) <=
              std::ldexp(static_cast<double>(e), static_cast<int>(d * d)));
  }
}
