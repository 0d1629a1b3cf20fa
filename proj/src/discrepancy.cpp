#include "llab/discrepancy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "llab/error.hpp"

namespace llab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

cplx sum_with_roots(const std::vector<std::uint64_t>& members, std::uint64_t k, std::uint64_t N,
                    const std::vector<cplx>& roots) {
  cplx acc = 0;
  const std::uint64_t step = k % N;
  for (std::uint64_t n : members) acc += roots[mulmod(step, n, N)];
  return acc;
}

}  // namespace

cplx exp_sum_over_set(const IndexSet& set, std::uint64_t k) {
  cplx acc = 0;
  for (std::uint64_t n : set.members()) acc += unit_root(mulmod(k, n, set.modulus()), set.modulus());
  return acc;
}

FriableAverageResult friable_average(const DilationContext& ctx, std::uint64_t b, std::uint64_t T,
                                     std::uint64_t q, std::uint64_t k) {
  const std::uint64_t N = ctx.modulus();
  ctx.require(b);
  const FriableSet fs = friable_enumerate(ctx.table(), T, q);
  for (std::uint64_t a : fs.members) ctx.require(a);

  const std::vector<cplx> roots = unit_roots(N);
  const std::vector<std::uint64_t> Eb = exceptional_set_d(ctx, b).bits.members();
  const cplx base = sum_with_roots(Eb, k, N, roots);
  const double slack = 1e-9 * static_cast<double>(std::max<std::size_t>(Eb.size(), 1));

  FriableAverageResult res;
  res.psi = fs.psi();
  cplx averaged = 0;
  for (std::uint64_t a : fs.members) {
    const cplx dilated = sum_with_roots(Eb, mulmod(k, a, N), N, roots);
    averaged += dilated;
    const double diff = std::abs(base - dilated);
    const double bound = 2.0 * static_cast<double>(exceptional_set_d(ctx, a).card());
    res.max_difference = std::max(res.max_difference, diff);
    if (diff > bound + slack) ++res.violations;
    const double ratio = bound > 0 ? diff / bound : (diff > slack ? INFINITY : 0.0);
    if (ratio > res.worst_ratio) {
      res.worst_ratio = ratio;
      res.worst_a = a;
    }
  }
  averaged /= static_cast<double>(fs.psi());
  res.averaged_difference = std::abs(base - averaged);
  return res;
}

VerificationReport friable_average_check(const DilationContext& ctx, std::uint64_t b,
                                         std::uint64_t T, std::uint64_t q, std::uint64_t k) {
  const auto t0 = std::chrono::steady_clock::now();
  const FriableAverageResult res = friable_average(ctx, b, T, q, k);
  VerificationReport r;
  r.check_id = "friable_average";
  r.inputs = {{"b", static_cast<std::int64_t>(b)},  {"T", static_cast<std::int64_t>(T)},
              {"q", static_cast<std::int64_t>(q)},  {"k", static_cast<std::int64_t>(k)},
              {"psi", static_cast<std::int64_t>(res.psi)},
              {"worst_a", static_cast<std::int64_t>(res.worst_a)}};
  r.lhs = res.worst_ratio;
  r.rhs = 1.0;
  r.tolerance = 1e-9;
  r.pass = res.violations == 0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "averaged_difference=%.6g", res.averaged_difference);
  r.detail = buf;
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

double star_discrepancy(std::vector<double> x) {
  if (x.empty()) throw UndefinedDiscrepancy("star_discrepancy: empty point set");
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, static_cast<double>(i + 1) / n - x[i]);
    d = std::max(d, x[i] - static_cast<double>(i) / n);
  }
  return d;
}

// The IndexSet overloads work on the integers k·N - n_k·card, i.e. the float
// formulas scaled by card·N, so the result is a single exact rational rounded once.

double star_discrepancy(const IndexSet& set) {
  if (set.empty()) throw UndefinedDiscrepancy("star_discrepancy: empty set");
  const auto N = static_cast<std::int64_t>(set.modulus());
  const auto card = static_cast<std::int64_t>(set.size());
  std::int64_t best = 0, k = 0;
  for (std::uint64_t n : set.members()) {
    const std::int64_t x = static_cast<std::int64_t>(n) * card;
    ++k;
    best = std::max({best, k * N - x, x - (k - 1) * N});
  }
  return static_cast<double>(best) / static_cast<double>(card * N);
}

double interval_discrepancy(std::vector<double> x) {
  if (x.empty()) throw UndefinedDiscrepancy("interval_discrepancy: empty point set");
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  const double inv = 1.0 / static_cast<double>(n);
  // a_k = k/n - x_k with sentinels x_0 = 0 and x_{n+1} = 1.
  std::vector<double> a(n + 2);
  a[0] = 0.0;
  for (std::size_t k = 1; k <= n; ++k) a[k] = static_cast<double>(k) * inv - x[k - 1];
  a[n + 1] = inv;

  // Closed [x_i, x_j]: excess a_j - a_i + 1/n for 1 ≤ i ≤ j ≤ n.
  double best = 0.0;
  double lo = a[1];
  for (std::size_t j = 1; j <= n; ++j) {
    lo = std::min(lo, a[j]);
    best = std::max(best, a[j] - lo);
  }
  // Open (x_i, x_j): deficit a_i - a_j + 1/n for 0 ≤ i < j ≤ n+1.
  double hi = a[0];
  for (std::size_t j = 1; j <= n + 1; ++j) {
    best = std::max(best, hi - a[j]);
    hi = std::max(hi, a[j]);
  }
  return best + inv;
}

double interval_discrepancy(const IndexSet& set) {
  if (set.empty()) throw UndefinedDiscrepancy("interval_discrepancy: empty set");
  const auto N = static_cast<std::int64_t>(set.modulus());
  const auto card = static_cast<std::int64_t>(set.size());
  const std::vector<std::uint64_t> m = set.members();
  const std::size_t n = m.size();
  std::vector<std::int64_t> a(n + 2);
  a[0] = 0;
  for (std::size_t k = 1; k <= n; ++k)
    a[k] = static_cast<std::int64_t>(k) * N - static_cast<std::int64_t>(m[k - 1]) * card;
  a[n + 1] = N;

  std::int64_t best = 0, lo = a[1];
  for (std::size_t j = 1; j <= n; ++j) {
    lo = std::min(lo, a[j]);
    best = std::max(best, a[j] - lo);
  }
  std::int64_t hi = a[0];
  for (std::size_t j = 1; j <= n + 1; ++j) {
    best = std::max(best, hi - a[j]);
    hi = std::max(hi, a[j]);
  }
  return static_cast<double>(best + N) / static_cast<double>(card * N);
}

double erdos_turan_bound(const IndexSet& set, std::uint64_t K) {
  if (set.empty()) throw UndefinedDiscrepancy("erdos_turan_bound: empty set");
  if (K < 1) throw std::invalid_argument("erdos_turan_bound: K must be >= 1");
  const std::uint64_t N = set.modulus();
  const std::vector<cplx> roots = unit_roots(N);
  const std::vector<std::uint64_t> members = set.members();
  const double card = static_cast<double>(members.size());
  double weighted = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k)
    weighted += std::abs(sum_with_roots(members, k, N, roots)) / static_cast<double>(k);
  return kErdosTuranConstant * (card / static_cast<double>(K) + weighted) / card;
}

DiscrepancyReport discrepancy_report(const IndexSet& set, std::uint64_t b, std::uint64_t K) {
  if (set.empty()) throw UndefinedDiscrepancy("discrepancy_report: empty set");
  if (K < 1) throw std::invalid_argument("discrepancy_report: K must be >= 1");
  DiscrepancyReport rep;
  rep.N = set.modulus();
  rep.b = b;
  rep.card = set.size();
  rep.K = K;
  rep.star = star_discrepancy(set);
  rep.interval = interval_discrepancy(set);
  const std::vector<cplx> roots = unit_roots(rep.N);
  const std::vector<std::uint64_t> members = set.members();
  double weighted = 0.0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    rep.exp_sums.push_back(std::abs(sum_with_roots(members, k, rep.N, roots)));
    weighted += rep.exp_sums.back() / static_cast<double>(k);
  }
  const double card = static_cast<double>(rep.card);
  rep.et_bound = kErdosTuranConstant * (card / static_cast<double>(K) + weighted) / card;
  return rep;
}

std::vector<FriableProfileEntry> friable_exp_sum_profile(
    const FriableSet& fs, std::uint64_t N,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples) {
  if (N < 3) throw std::invalid_argument("friable_exp_sum_profile: N must be >= 3");
  std::vector<FriableProfileEntry> out;
  for (const auto& [k, n] : samples) {
    const std::uint64_t kn = mulmod(k, n, N);
    cplx acc = 0;
    for (std::uint64_t a : fs.members) acc += unit_root(mulmod(kn, a, N), N);
    out.push_back({k, n, std::abs(acc) / static_cast<double>(fs.psi())});
  }
  return out;
}

}  // namespace llab
