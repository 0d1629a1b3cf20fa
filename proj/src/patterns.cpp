#include "llab/patterns.hpp"

#include <stdexcept>
#include <string>

#include "llab/error.hpp"

namespace llab {

namespace {

void check_modulus(const ArithTable& table, std::uint64_t N, const char* who) {
  if (N < 3) throw std::invalid_argument(std::string(who) + ": N must be >= 3");
  table.require(N);
}

PatternReport finish(std::uint64_t N, const std::array<std::uint64_t, 4>& c) {
  PatternReport r;
  r.N = N;
  r.counts = {{{c[0], c[1]}, {c[2], c[3]}}};
  const std::uint64_t agree = c[0] + c[3];
  const std::uint64_t disagree = c[1] + c[2];
  r.corr = static_cast<std::int64_t>(agree) - static_cast<std::int64_t>(disagree);
  r.eta_min = agree <= disagree ? 1 : -1;
  r.e_size = agree <= disagree ? agree : disagree;
  return r;
}

inline int slot(const ArithTable& t, std::uint64_t N, std::uint64_t n) {
  return (t.lambda(n) > 0 ? 0 : 2) + (t.lambda(N - n) > 0 ? 0 : 1);
}

}  // namespace

PatternReport pattern_report_serial(const ArithTable& table, std::uint64_t N) {
  check_modulus(table, N, "pattern_report");
  std::array<std::uint64_t, 4> c{};
  for (std::uint64_t n = 1; n < N; ++n) ++c[slot(table, N, n)];
  return finish(N, c);
}

PatternReport pattern_report(const ArithTable& table, std::uint64_t N) {
  check_modulus(table, N, "pattern_report");
  std::uint64_t c[4] = {0, 0, 0, 0};
  const auto hi = static_cast<std::int64_t>(N);
#pragma omp parallel for reduction(+ : c[:4]) schedule(static)
  for (std::int64_t n = 1; n < hi; ++n) ++c[slot(table, N, static_cast<std::uint64_t>(n))];
  return finish(N, {c[0], c[1], c[2], c[3]});
}

ExceptionalSet exceptional_set_base(const ArithTable& table, std::uint64_t N) {
  const PatternReport rep = pattern_report(table, N);
  ExceptionalSet e{N, 1, rep.eta_min, IndexSet(N)};
  for (std::uint64_t n = 1; n < N; ++n)
    if (table.lambda(n) * table.lambda(N - n) == rep.eta_min) e.bits.insert(n);
  return e;
}

std::string_view to_string(WitnessCase c) noexcept {
  switch (c) {
    case WitnessCase::eight_divides: return "ii";
    case WitnessCase::half_split: return "iii";
    case WitnessCase::odd_square: return "iv";
    case WitnessCase::scan: return "scan";
    case WitnessCase::none: return "none";
  }
  return "none";
}

std::uint64_t square_pattern_witness(const ArithTable& table, std::uint64_t M) {
  if (M < 11 || M % 2 == 0)
    throw std::invalid_argument("square_pattern_witness: M must be odd and >= 11, got " +
                                std::to_string(M));
  table.require(M * M);
  for (std::uint64_t n = 1; 2 * n < M; ++n)
    if (table.lambda(n) == table.lambda(M - n)) return M - 2 * n;
  throw AssertionFailure("square_pattern_witness: no n < M/2 with lambda(n) = lambda(M-n) for M=" +
                         std::to_string(M));
}

ShustermanWitness shusterman_witness(const ArithTable& table, std::uint64_t N) {
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("shusterman_witness: N must be even and >= 4, got " +
                                std::to_string(N));
  table.require(N);
  ShustermanWitness w{N, 0, 0, WitnessCase::none};

  if (N % 8 == 0) {
    const std::uint64_t rest = N / 8;
    if (table.lambda(rest) < 0)
      w.a = w.b = 4 * rest;
    else
      w.a = 3 * rest, w.b = 5 * rest;
    w.tag = WitnessCase::eight_divides;
    return w;
  }
  if (table.lambda(N) > 0) {
    w.a = w.b = N / 2;
    w.tag = WitnessCase::half_split;
    return w;
  }

  // N = 2^k M² N' with M² the largest odd square divisor.
  std::uint64_t M = 1;
  for (const auto& [p, e] : factorize(table, N))
    if (p != 2)
      for (unsigned i = 0; i < e / 2; ++i) M *= p;
  if (M >= 11) {
    const std::uint64_t d = square_pattern_witness(table, M);
    const std::uint64_t scale = N / (M * M);
    w.a = scale * (M * M - d * d);
    w.b = scale * d * d;
    w.tag = WitnessCase::odd_square;
    return w;
  }

  for (std::uint64_t a = 1; 2 * a <= N; ++a)
    if (table.lambda(a) < 0 && table.lambda(N - a) < 0) {
      w.a = a;
      w.b = N - a;
      w.tag = WitnessCase::scan;
      return w;
    }
  return w;
}

}  // namespace llab
