#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "llab/arith.hpp"
#include "llab/error.hpp"
#include "oracle.hpp"

using namespace llab;

TEST_CASE("liouville values on small n") {
  const ArithTable t = build_table(12);
  const int expected[] = {1, -1, -1, 1, -1, 1, -1, -1, 1, 1};
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(t.lambda(n) == expected[n - 1]);
  CHECK(t.lambda(12) == -1);
  CHECK(build_table(1).lambda(1) == 1);
}

TEST_CASE("table agrees with trial division") {
  const ArithTable t = build_table(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(t.lambda(n) == oracle::liouville(n));
    REQUIRE(t.omega(n) == oracle::big_omega(n));
    REQUIRE(t.pplus(n) == oracle::largest_prime_factor(n));
    REQUIRE(t.is_prime(n) == oracle::prime(n));
    REQUIRE(is_prime_u64(n) == oracle::prime(n));
  }
}

TEST_CASE("liouville is completely multiplicative") {
  const ArithTable t = build_table(200 * 200);
  for (std::uint64_t m = 1; m <= 200; ++m)
    for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(t.lambda(m * n) == t.lambda(m) * t.lambda(n));
}

TEST_CASE("arith_query") {
  const ArithTable t = build_table(100);
  CHECK(arith_query(t, 1) == ArithValue{1, 0, 1});
  CHECK(arith_query(t, 8) == ArithValue{-1, 3, 2});
  CHECK(arith_query(t, 40) == ArithValue{1, 4, 5});
  CHECK_THROWS_AS(arith_query(t, 101), TableTooSmall);
  CHECK_THROWS_AS(arith_query(t, 0), std::invalid_argument);
  try {
    t.require(500);
    FAIL("expected TableTooSmall");
  } catch (const TableTooSmall& e) {
    CHECK(e.required() == 500);
    CHECK(e.available() == 100);
  }
}

TEST_CASE("build_table rejects bad bounds") {
  CHECK_THROWS_AS(build_table(0), std::invalid_argument);
  CHECK_THROWS_AS(build_table(kMaxTableSize + 1), std::invalid_argument);
}

TEST_CASE("friable sets") {
  const ArithTable t = build_table(1000);
  auto s = friable_enumerate(t, 10, 2);
  CHECK(s.members == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(s.psi() == 4);
  s = friable_enumerate(t, 10, 3);
  CHECK(s.members == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9});
  CHECK(s.psi() == 7);
  CHECK(friable_enumerate(t, 50, 50).psi() == 50);
  CHECK(friable_enumerate(t, 50, 97).psi() == 50);
  for (std::uint64_t T : {1u, 37u, 500u})
    for (std::uint64_t q : {2u, 5u, 30u}) {
      std::vector<std::uint64_t> brute;
      for (std::uint64_t n = 1; n <= T; ++n)
        if (oracle::largest_prime_factor(n) <= q) brute.push_back(n);
      CHECK(friable_enumerate(t, T, q).members == brute);
    }
  CHECK_THROWS_AS(friable_enumerate(t, 2000, 3), TableTooSmall);
}

TEST_CASE("primes in dyadic windows") {
  const ArithTable t = build_table(100);
  CHECK(primes_between(t, 3) == std::vector<std::uint64_t>{5});
  CHECK(primes_between(t, 10) == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_between(t, 1) == std::vector<std::uint64_t>{2});
  CHECK(primes_in_range(t, 90, 100) == std::vector<std::uint64_t>{97});
  CHECK_THROWS_AS(primes_between(t, 60), TableTooSmall);
}

TEST_CASE("factorize") {
  const ArithTable t = build_table(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(factorize(t, n) == oracle::factor(n));
}

TEST_CASE("binary cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "llab_test_cache";
  std::filesystem::create_directories(dir);
  const auto path = dir / "arith.bin";
  const ArithTable t = build_table(12345);
  save_table(t, path);
  const ArithTable u = load_table(path);
  REQUIRE(u.n_max() == t.n_max());
  for (std::uint64_t n = 1; n <= t.n_max(); ++n) {
    REQUIRE(u.lambda(n) == t.lambda(n));
    REQUIRE(u.omega(n) == t.omega(n));
    REQUIRE(u.pplus(n) == t.pplus(n));
  }

  {
    std::ofstream bad(dir / "bad.bin", std::ios::binary);
    bad << "NOTATABLE";
  }
  CHECK_THROWS(load_table(dir / "bad.bin"));
  CHECK_THROWS(load_table(dir / "missing.bin"));

  std::filesystem::resize_file(path, 40);
  CHECK_THROWS(load_table(path));
  std::filesystem::remove_all(dir);
}
