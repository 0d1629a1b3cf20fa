#include "llab/dilation.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "llab/error.hpp"

namespace llab {

std::uint64_t phi(std::uint64_t d, std::uint64_t n, std::uint64_t N) {
  if (n < 1 || n >= N) throw std::invalid_argument("phi: n outside [1, N)");
  const auto m = static_cast<std::uint64_t>((static_cast<unsigned __int128>(d) * n) % N);
  if (m == 0)
    throw std::invalid_argument("phi: d*n = 0 mod N (d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")");
  return m;
}

DilationContext::DilationContext(const ArithTable& table, std::uint64_t N, std::uint64_t d_max)
    : table_(&table), N_(N), d_max_(d_max) {
  if (N < 3) throw std::invalid_argument("DilationContext: N must be >= 3");
  if (d_max < 1) throw std::invalid_argument("DilationContext: d_max must be >= 1");
  table.require(d_max * (N - 1));
  base_ = exceptional_set_base(table, N);
}

void DilationContext::require(std::uint64_t d) const {
  if (d < 1) throw std::invalid_argument("dilation index must be >= 1");
  if (std::gcd(d, N_) != 1)
    throw std::invalid_argument("gcd(d, N) != 1 for d=" + std::to_string(d) +
                                ", N=" + std::to_string(N_));
  table_->require(d * (N_ - 1));
}

int lambda_pair(const DilationContext& ctx, std::uint64_t d, std::uint64_t n) {
  const std::uint64_t N = ctx.modulus();
  const std::uint64_t m = phi(d, n, N);
  ctx.table().require(d * n);
  return ctx.table().lambda(d * n) * ctx.table().lambda(m);
}

namespace {

// Fills bits [64w, 64w+64) of E_d(N); words are disjoint, so the parallel
// kernel needs no synchronisation.
std::uint64_t exceptional_word(const ArithTable& t, std::uint64_t N, std::uint64_t d,
                               std::uint64_t w) {
  std::uint64_t word = 0;
  const std::uint64_t lo = std::max<std::uint64_t>(w * 64, 1);
  const std::uint64_t hi = std::min<std::uint64_t>(w * 64 + 64, N);
  if (lo >= hi) return 0;
  std::uint64_t dn = d * lo;
  std::uint64_t r = dn % N;
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (t.lambda(dn) * t.lambda(r) < 0) word |= std::uint64_t{1} << (n & 63);
    dn += d;
    r += d;
    while (r >= N) r -= N;
  }
  return word;
}

}  // namespace

ExceptionalSet exceptional_set_d(const DilationContext& ctx, std::uint64_t d) {
  ctx.require(d);
  const std::uint64_t N = ctx.modulus();
  std::vector<std::uint64_t> words((N + 63) / 64, 0);
  const auto nw = static_cast<std::int64_t>(words.size());
  const ArithTable& t = ctx.table();
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < nw; ++w)
    words[static_cast<std::size_t>(w)] = exceptional_word(t, N, d, static_cast<std::uint64_t>(w));
  return {N, d, 1, IndexSet(N, std::move(words))};
}

ExceptionalSet exceptional_set_d_serial(const DilationContext& ctx, std::uint64_t d) {
  ctx.require(d);
  const std::uint64_t N = ctx.modulus();
  ExceptionalSet e{N, d, 1, IndexSet(N)};
  for (std::uint64_t n = 1; n < N; ++n)
    if (lambda_pair(ctx, d, n) < 0) e.bits.insert(n);
  return e;
}

IndexSet preimage(const IndexSet& s, std::uint64_t d) {
  const std::uint64_t N = s.modulus();
  IndexSet out(N);
  std::uint64_t r = 0;
  const std::uint64_t step = d % N;
  for (std::uint64_t n = 1; n < N; ++n) {
    r += step;
    if (r >= N) r -= N;
    if (s.contains(r)) out.insert(n);
  }
  return out;
}

bool phi_is_bijection(std::uint64_t d, std::uint64_t N) {
  std::vector<std::uint8_t> hit(N, 0);
  for (std::uint64_t n = 1; n < N; ++n) {
    const auto m = static_cast<std::uint64_t>((static_cast<unsigned __int128>(d) * n) % N);
    if (m == 0 || hit[m]) return false;
    hit[m] = 1;
  }
  return true;
}

GRatio g_ratio(const DilationContext& ctx, std::uint64_t d) {
  const std::uint64_t den = ctx.base().card();
  if (den == 0)
    throw UndefinedRatio("g_ratio: E(N) is empty for N=" + std::to_string(ctx.modulus()));
  return {exceptional_set_d(ctx, d).card(), den};
}

VerificationReport verify_symdiff(const DilationContext& ctx, std::uint64_t a, std::uint64_t b) {
  const auto t0 = std::chrono::steady_clock::now();
  if (a < 2 || b < 2) throw std::invalid_argument("verify_symdiff: a, b must be >= 2");
  ctx.require(a * b);
  const IndexSet Ea = exceptional_set_d(ctx, a).bits;
  const IndexSet Eb = exceptional_set_d(ctx, b).bits;
  const IndexSet Eab = exceptional_set_d(ctx, a * b).bits;
  const IndexSet right = Eb.symmetric_difference(preimage(Ea, b));
  const IndexSet left = Ea.symmetric_difference(preimage(Eb, a));
  const IndexSet drift = Eb.symmetric_difference(preimage(Eb, a));

  const bool composition = Eab == right;
  const bool reciprocity = left == right;
  const bool bound = drift.size() <= 2 * Ea.size();

  VerificationReport r;
  r.check_id = "symdiff_reciprocity";
  r.inputs = {{"a", static_cast<std::int64_t>(a)},
              {"b", static_cast<std::int64_t>(b)},
              {"card_Ea", static_cast<std::int64_t>(Ea.size())},
              {"card_Eb", static_cast<std::int64_t>(Eb.size())},
              {"card_Eab", static_cast<std::int64_t>(Eab.size())},
              {"composition_ok", composition},
              {"reciprocity_ok", reciprocity}};
  r.lhs = static_cast<double>(drift.size());
  r.rhs = static_cast<double>(2 * Ea.size());
  r.pass = composition && reciprocity && bound;
  r.tolerance = 0.0;
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

VerificationReport verify_subadditivity(const DilationContext& ctx,
                                        std::span<const std::uint64_t> factors) {
  const auto t0 = std::chrono::steady_clock::now();
  if (factors.empty()) throw std::invalid_argument("verify_subadditivity: no factors");
  std::uint64_t product = 1;
  std::uint64_t sum = 0;
  for (std::uint64_t m : factors) {
    if (m < 2) throw std::invalid_argument("verify_subadditivity: factors must be >= 2");
    product *= m;
    ctx.require(product);
  }
  for (std::uint64_t m : factors) sum += exceptional_set_d(ctx, m).card();
  const std::uint64_t lhs = exceptional_set_d(ctx, product).card();
  const std::uint64_t rhs = factors.size() * sum;

  VerificationReport r;
  r.check_id = "subadditivity";
  for (std::size_t i = 0; i < factors.size(); ++i)
    r.inputs.emplace_back("m" + std::to_string(i + 1), static_cast<std::int64_t>(factors[i]));
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.pass = lhs <= rhs;
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

VerificationReport verify_composite_bound(const DilationContext& ctx, std::uint64_t R) {
  const auto t0 = std::chrono::steady_clock::now();
  if (R < 2) throw std::invalid_argument("verify_composite_bound: R must be >= 2");
  ctx.require(R);
  std::uint64_t weighted = 0;
  for (const auto& [q, k] : factorize(ctx.table(), R))
    weighted += k * exceptional_set_d(ctx, q).card();
  const std::uint64_t lhs = exceptional_set_d(ctx, R).card();
  const std::uint64_t rhs = ctx.table().omega(R) * weighted;

  VerificationReport r;
  r.check_id = "composite_bound";
  r.inputs = {{"R", static_cast<std::int64_t>(R)}};
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.pass = lhs <= rhs;
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

}  // namespace llab
