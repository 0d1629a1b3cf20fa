#include "llab/pierce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "llab/error.hpp"

namespace llab {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("reconstruct: 128-bit overflow");
  return out;
}

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("reconstruct: 128-bit overflow");
  return out;
}

struct Interval {
  std::uint64_t lo;  // first m with m(r+1) > N
  std::uint64_t hi;  // last m with m·r < N
  bool empty() const noexcept { return hi < lo; }
  std::uint64_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }
};

Interval digit_interval(std::uint64_t N, std::uint64_t r) { return {N / (r + 1) + 1, (N - 1) / r}; }

}  // namespace

std::uint64_t theta(std::uint64_t n, std::uint64_t N) {
  if (n == 0) throw std::invalid_argument("theta: n must be >= 1");
  return N - n * (N / n);
}

PierceSignature p_signature(std::uint64_t n, std::uint64_t N, std::uint64_t p) {
  if (n < 1 || n >= N) throw std::invalid_argument("p_signature: n outside [1, N)");
  if (p < 2 || p >= N) throw std::invalid_argument("p_signature: p outside [2, N)");
  PierceSignature s{N, n, p, {}, {n}};
  std::uint64_t x = n;
  while (x != 0 && N / x < p) {
    const std::uint64_t r = N / x;
    s.digits.push_back(r);
    x = N - r * x;
    s.trajectory.push_back(x);
  }
  return s;
}

Reconstruction reconstruct(std::span<const std::uint64_t> digits, std::uint64_t residual,
                           std::uint64_t N) {
  Reconstruction out;
  if (digits.empty()) {
    out.num = residual;
    out.den = 1;
  } else {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) throw std::invalid_argument("reconstruct: digits must be positive");
      if (i && digits[i] <= digits[i - 1])
        throw std::invalid_argument("reconstruct: digits must be strictly increasing");
    }
    // Over the common denominator r_1⋯r_k the j-th term is (-1)^{j-1}·N·r_{j+1}⋯r_k.
    const std::size_t k = digits.size();
    i128 suffix = 1;
    i128 num = (k % 2 == 0 ? 1 : -1) * static_cast<i128>(residual);
    for (std::size_t j = k; j-- > 0;) {
      const i128 term = checked_mul(static_cast<i128>(N), suffix);
      num = checked_add(num, j % 2 == 0 ? term : -term);
      suffix = checked_mul(suffix, static_cast<i128>(digits[j]));
    }
    const i128 g = gcd128(num, suffix);
    out.num = num / g;
    out.den = suffix / g;
  }
  out.integral = out.den == 1;
  out.in_range = out.integral && out.num > 0 && out.num < static_cast<i128>(N);
  return out;
}

ProductFormulaResult product_formula(const DilationContext& ctx, std::uint64_t p, bool diagnose) {
  const std::uint64_t N = ctx.modulus();
  if (p < 2 || p >= N) throw std::invalid_argument("product_formula: p outside [2, N)");
  ctx.require(p);
  const ArithTable& t = ctx.table();
  if (!t.is_prime(N)) throw std::invalid_argument("product_formula: N must be prime");
  const IndexSet& E = ctx.base().bits;

  // 0 = holds, 1 = fails and explained, 2 = fails and unexplained
  std::vector<std::uint8_t> state(N, 0);
  const auto hi = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static)
  for (std::int64_t sn = 1; sn < hi; ++sn) {
    const auto n = static_cast<std::uint64_t>(sn);
    const PierceSignature sig = p_signature(n, N, p);
    int product = 1;
    for (std::size_t j = 0; j < sig.k(); ++j) {
      const std::uint64_t r = sig.digits[j];
      const std::uint64_t m = (p * sig.trajectory[j]) % N;
      product *= t.lambda(r * m) * t.lambda((r * m) % N);
    }
    const std::uint64_t pn = p * n;
    const int direct = t.lambda(pn) * t.lambda(pn % N);
    if (direct == product) continue;
    std::uint8_t s = 1;
    if (diagnose) {
      bool explained = false;
      for (std::size_t j = 0; j < sig.k() && !explained; ++j) {
        const std::uint64_t next = sig.trajectory[j + 1];
        explained = E.contains(sig.digits[j] * sig.trajectory[j]) ||
                    (next != 0 && E.contains((p * next) % N));
      }
      if (!explained) s = 2;
    }
    state[n] = s;
  }

  ProductFormulaResult res{N, p, 0, 2 * p * ctx.base().card(), {}, 0};
  for (std::uint64_t n = 1; n < N; ++n) {
    if (!state[n]) continue;
    ++res.failures;
    if (state[n] == 2) ++res.unexplained;
    if (res.failing_sample.size() < 8) res.failing_sample.push_back(n);
  }
  return res;
}

VerificationReport verify_product_formula(const DilationContext& ctx, std::uint64_t p,
                                          bool diagnose) {
  const auto t0 = std::chrono::steady_clock::now();
  const ProductFormulaResult res = product_formula(ctx, p, diagnose);
  VerificationReport r;
  r.check_id = "product_formula_budget";
  r.inputs = {{"p", static_cast<std::int64_t>(p)},
              {"card_E", static_cast<std::int64_t>(ctx.base().card())},
              {"unexplained", static_cast<std::int64_t>(res.unexplained)}};
  r.lhs = static_cast<double>(res.failures);
  r.rhs = static_cast<double>(res.budget);
  r.pass = res.failures <= res.budget && res.unexplained == 0;
  for (std::uint64_t n : res.failing_sample) r.detail += (r.detail.empty() ? "failing=" : " ") + std::to_string(n);
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

std::uint64_t NuStats::max_value() const noexcept {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

namespace {

NuStats nu_subset_oracle(std::uint64_t N, std::uint64_t r) {
  if (r > kSubsetOracleMaxDigit)
    throw UnsupportedMode("nu_compute: subset oracle needs r <= 22, got r=" + std::to_string(r));
  const Interval iv = digit_interval(N, r);
  NuStats st{N, r, iv.lo, std::vector<std::uint64_t>(iv.size(), 0), 0};
  std::vector<std::uint64_t> digits;
  const std::uint64_t subsets = std::uint64_t{1} << (r - 1);
  for (std::uint64_t i = 0; i < iv.size(); ++i) {
    const std::uint64_t m = iv.lo + i;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      digits.clear();
      for (std::uint64_t b = 0; b + 1 < r; ++b)
        if (mask >> b & 1) digits.push_back(b + 1);
      const Reconstruction rec = reconstruct(digits, m, N);
      if (!rec.in_range) continue;
      // A potential preimage only counts if its forward digits really are `digits`.
      std::uint64_t x = static_cast<std::uint64_t>(rec.num);
      bool ok = true;
      for (std::uint64_t d : digits) {
        if (x == 0 || N / x != d) {
          ok = false;
          break;
        }
        x = N - d * x;
      }
      if (ok && x == m) ++st.values[i];
    }
    st.moment += st.values[i];
  }
  return st;
}

std::vector<NuStats> empty_stats(std::uint64_t N, std::uint64_t r_max,
                                 std::vector<std::uint64_t>& offset) {
  std::vector<NuStats> out;
  offset.assign(r_max + 2, 0);
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    const Interval iv = digit_interval(N, r);
    out.push_back({N, r, iv.lo, std::vector<std::uint64_t>(iv.size(), 0), 0});
    offset[r + 1] = offset[r] + iv.size();
  }
  return out;
}

inline void walk(std::uint64_t n, std::uint64_t N, std::uint64_t r_max,
                 const std::vector<NuStats>& shape, const std::vector<std::uint64_t>& offset,
                 std::uint64_t* acc) {
  std::uint64_t x = n;
  while (x != 0) {
    const std::uint64_t r = N / x;
    if (r <= r_max) {
      const NuStats& s = shape[r - 1];
      if (x >= s.m_lo && x - s.m_lo < s.values.size()) ++acc[offset[r] + (x - s.m_lo)];
    }
    x = N - r * x;
  }
}

void finish_stats(std::vector<NuStats>& out, const std::vector<std::uint64_t>& offset,
                  const std::vector<std::uint64_t>& flat) {
  for (NuStats& s : out) {
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = flat[offset[s.r] + i];
    s.moment = 0;
    for (std::uint64_t v : s.values) s.moment += v;
  }
}

}  // namespace

std::vector<NuStats> nu_scan_all_serial(std::uint64_t N, std::uint64_t r_max) {
  if (N < 2 || r_max < 1) throw std::invalid_argument("nu_scan_all: need N >= 2, r_max >= 1");
  std::vector<std::uint64_t> offset;
  std::vector<NuStats> out = empty_stats(N, r_max, offset);
  std::vector<std::uint64_t> flat(offset.back(), 0);
  for (std::uint64_t n = 1; n < N; ++n) walk(n, N, r_max, out, offset, flat.data());
  finish_stats(out, offset, flat);
  return out;
}

std::vector<NuStats> nu_scan_all(std::uint64_t N, std::uint64_t r_max) {
  if (N < 2 || r_max < 1) throw std::invalid_argument("nu_scan_all: need N >= 2, r_max >= 1");
  std::vector<std::uint64_t> offset;
  std::vector<NuStats> out = empty_stats(N, r_max, offset);
  std::vector<std::uint64_t> flat(offset.back(), 0);
  const auto hi = static_cast<std::int64_t>(N);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(flat.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t n = 1; n < hi; ++n)
      walk(static_cast<std::uint64_t>(n), N, r_max, out, offset, local.data());
#pragma omp critical(llab_nu_merge)
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += local[i];
  }
  finish_stats(out, offset, flat);
  return out;
}

NuStats nu_compute(std::uint64_t N, std::uint64_t r, NuMode mode) {
  if (r < 1) throw std::invalid_argument("nu_compute: r must be >= 1");
  if (mode == NuMode::subset_oracle) return nu_subset_oracle(N, r);
  return std::move(nu_scan_all(N, r).back());
}

std::vector<NuMomentRow> nu_moment_sweep(std::uint64_t N, std::uint64_t r_max) {
  if (r_max < 2) throw std::invalid_argument("nu_moment_sweep: r_max must be >= 2");
  const std::vector<NuStats> all = nu_scan_all(N, r_max);
  std::vector<NuMomentRow> rows;
  for (std::uint64_t r = 2; r <= r_max; ++r) {
    NuMomentRow row{N, r, all[r - 1].moment, 0.0, false};
    row.ratio = static_cast<double>(row.moment) * static_cast<double>(r) /
                (static_cast<double>(N) * std::log(static_cast<double>(r)));
    row.flagged = row.ratio > kNuMomentConstant;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace llab
