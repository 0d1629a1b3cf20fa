#include "llab/characters.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "llab/dilation.hpp"
#include "llab/parallel.hpp"

namespace llab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

cplx CharacterTable::chi(std::uint64_t j, std::uint64_t n) const {
  n %= N_;
  if (n == 0) return 0.0;
  return unit_root(mulmod(j % order(), ind_[n], order()), order());
}

CharacterTable build_characters(std::uint64_t N) {
  if (!is_prime_u64(N))
    throw std::invalid_argument("build_characters: N=" + std::to_string(N) + " is not prime");
  CharacterTable ct;
  ct.N_ = N;
  const std::uint64_t order = N - 1;
  const auto factors = distinct_prime_factors(order);
  std::uint64_t g = 1;
  if (N > 2) {
    for (g = 2;; ++g) {
      bool generator = true;
      for (std::uint64_t q : factors)
        if (powmod(g, order / q, N) == 1) {
          generator = false;
          break;
        }
      if (generator) break;
    }
  }
  ct.root_ = g;
  ct.ind_.assign(N, 0);
  ct.pow_.assign(order, 0);
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < order; ++j) {
    ct.pow_[j] = x;
    ct.ind_[x] = j;
    x = mulmod(x, g, N);
  }
  return ct;
}

cplx twisted_sum(const CharacterTable& ct, const ArithTable& table, std::uint64_t j) {
  const std::uint64_t N = ct.modulus();
  if (j >= ct.order()) throw std::invalid_argument("twisted_sum: character index out of range");
  table.require(N - 1);
  cplx acc = 0;
  for (std::uint64_t n = 1; n < N; ++n) acc += static_cast<double>(table.lambda(n)) * ct.chi(j, n);
  return acc;
}

std::vector<cplx> twisted_sums(const CharacterTable& ct, const ArithTable& table) {
  table.require(ct.modulus() - 1);
  std::vector<cplx> x(ct.order());
  for (std::uint64_t t = 0; t < ct.order(); ++t) x[t] = table.lambda(ct.power(t));
  return dft(x);
}

double orthogonality_error(const CharacterTable& ct) {
  const std::uint64_t N = ct.modulus();
  double worst = 0.0;
  for (std::uint64_t a = 1; a < N; ++a)
    for (std::uint64_t b = 1; b < N; ++b) {
      cplx acc = 0;
      for (std::uint64_t j = 0; j < ct.order(); ++j) acc += ct.chi(j, a) * std::conj(ct.chi(j, b));
      acc /= static_cast<double>(ct.order());
      worst = std::max(worst, std::abs(acc - cplx(a == b ? 1.0 : 0.0)));
    }
  return worst;
}

EpDecomposition ep_decomposition(const CharacterTable& ct, const ArithTable& table,
                                 std::uint64_t P) {
  const std::uint64_t N = ct.modulus();
  EpDecomposition out;
  out.primes = primes_between(table, P);
  if (out.primes.empty())
    throw std::invalid_argument("ep_decomposition: no primes in (P, 2P] for P=" + std::to_string(P));
  for (std::uint64_t p : out.primes)
    if (p % N == 0) throw std::invalid_argument("ep_decomposition: prime in range divides N");

  const DilationContext ctx(table, N, 2 * P);
  double lhs = 0.0;
  for (std::uint64_t p : out.primes) lhs += static_cast<double>(exceptional_set_d(ctx, p).card());
  const double count = static_cast<double>(out.primes.size());
  out.lhs = lhs / count;

  const std::vector<cplx> sums = twisted_sums(ct, table);
  const std::uint64_t order = ct.order();
  const cplx total = deterministic_sum<cplx>(order, [&](std::size_t j) {
    cplx weight = 0;
    for (std::uint64_t p : out.primes)
      weight += static_cast<double>(table.lambda(p)) * std::conj(ct.chi(j, p));
    weight /= count;
    return weight * std::norm(sums[j]);
  });
  {
    cplx w0 = 0;
    for (std::uint64_t p : out.primes) w0 += static_cast<double>(table.lambda(p));
    out.principal_term = (w0 / count * std::norm(sums[0])).real() / static_cast<double>(order);
  }
  const cplx scaled = total / (2.0 * static_cast<double>(order));
  out.rhs = 0.5 * static_cast<double>(order) - scaled.real();
  out.rhs_imag = -scaled.imag();
  return out;
}

VerificationReport verify_ep_decomposition(const CharacterTable& ct, const ArithTable& table,
                                           std::uint64_t P) {
  const auto t0 = std::chrono::steady_clock::now();
  const EpDecomposition e = ep_decomposition(ct, table, P);
  const double N = static_cast<double>(ct.modulus());
  VerificationReport r;
  r.check_id = "character_decomposition";
  r.inputs = {{"P", static_cast<std::int64_t>(P)},
              {"primes", static_cast<std::int64_t>(e.primes.size())},
              {"root", static_cast<std::int64_t>(ct.root())}};
  r.lhs = e.lhs;
  r.rhs = e.rhs;
  r.tolerance = 1e-6 * N;
  r.pass = std::abs(e.lhs - e.rhs) <= r.tolerance && std::abs(e.rhs_imag) <= 1e-9 * N;
  char buf[96];
  std::snprintf(buf, sizeof buf, "rhs_imag=%.3e", e.rhs_imag);
  r.detail = buf;
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

}  // namespace llab
