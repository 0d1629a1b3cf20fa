#include "llab/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <utility>

#include <omp.h>

#include "llab/characters.hpp"
#include "llab/dilation.hpp"
#include "llab/discrepancy.hpp"
#include "llab/error.hpp"
#include "llab/patterns.hpp"
#include "llab/pierce.hpp"
#include "llab/spectral.hpp"

namespace llab {

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 9> kCommands{{
    {"patterns", Command::patterns},
    {"shusterman", Command::shusterman},
    {"dilation", Command::dilation},
    {"spectral", Command::spectral},
    {"characters", Command::characters},
    {"pierce", Command::pierce},
    {"nu-moment", Command::nu_moment},
    {"discrepancy", Command::discrepancy},
    {"full-suite", Command::full_suite},
}};

/// Parameters after defaults are applied.
struct Resolved {
  std::uint64_t d, p, r, T, q, K, P;
};

Resolved resolve(const CampaignConfig& c) {
  const CampaignParams& p = c.params;
  const bool full = c.command == Command::full_suite;
  const std::uint64_t d_default = c.command == Command::discrepancy ? 10 : full ? 6 : 8;
  return Resolved{p.d.value_or(d_default), p.p.value_or(5), p.r.value_or(full ? 8 : 12),
                  p.T.value_or(10),        p.q.value_or(3), p.K.value_or(10),
                  p.P.value_or(3)};
}

std::uint64_t multiplier(Command c, const Resolved& r) {
  switch (c) {
    case Command::dilation:
      return r.d * r.d;
    case Command::spectral:
      return r.d;
    case Command::characters:
      return 2 * r.P;
    case Command::pierce:
      return r.p;
    case Command::discrepancy:
      return std::max(r.d, r.T);
    case Command::full_suite:
      return std::max({r.d * r.d, 2 * r.P, r.p, r.T});
    default:
      return 1;
  }
}

bool applies(Command c, const Resolved& r, const ArithTable& t, std::uint64_t N) {
  switch (c) {
    case Command::patterns:
    case Command::dilation:
    case Command::spectral:
    case Command::full_suite:
      return N >= 3;
    case Command::shusterman:
      return N >= 4 && N % 2 == 0;
    case Command::characters:
      return t.is_prime(N) && N >= 3;
    case Command::pierce:
      return t.is_prime(N) && N > r.p;
    case Command::nu_moment:
    case Command::discrepancy:
      return t.is_prime(N) && N >= 5;
  }
  return false;
}

std::vector<std::string> header_for(Command c) {
  switch (c) {
    case Command::patterns:
    case Command::shusterman:
      return {"N",        "corr",  "c_pp",   "c_pm",      "c_mp",     "c_mm",
              "eta",      "e_size", "witness_a", "witness_b", "case_tag"};
    case Command::nu_moment:
      return {"N", "r", "moment", "ratio"};
    case Command::discrepancy:
      return {"set_id", "N", "b", "card", "star", "et_bound", "K"};
    default:
      return report_header();
  }
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

/// Everything produced for one N; merged in N order afterwards.
struct Outcome {
  std::vector<std::pair<std::string, Row>> rows;  ///< (sort key, row)
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::string error;
};

class Worker {
 public:
  Worker(const CampaignConfig& config, const Resolved& params, const ArithTable& table,
         std::uint64_t N, Outcome& out)
      : cfg_(config), prm_(params), table_(table), N_(N), out_(out) {}

  void run();

 private:
  void report(VerificationReport r) {
    ++out_.checks;
    if (!r.pass) ++out_.failures;
    out_.rows.emplace_back(r.check_id, report_row(r, N_, cfg_.format == Format::json));
  }
  void record(std::string id, std::vector<std::pair<std::string, std::int64_t>> inputs,
              double lhs, double rhs, bool pass, double tol = 0.0, std::string detail = {}) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = pass;
    r.tolerance = tol;
    r.detail = std::move(detail);
    report(std::move(r));
  }
  void row(Row r, bool pass) {
    ++out_.checks;
    if (!pass) ++out_.failures;
    out_.rows.emplace_back(std::string{}, std::move(r));
  }

  void pattern_row(bool with_stats);
  void pattern_checks();
  void dilation_checks(std::uint64_t D);
  void spectral_checks(std::uint64_t D);
  void character_checks();
  void pierce_checks();
  void nu_rows();
  void nu_checks();
  void discrepancy_rows();
  void discrepancy_checks();

  const CampaignConfig& cfg_;
  const Resolved& prm_;
  const ArithTable& table_;
  std::uint64_t N_;
  Outcome& out_;
};

bool pattern_identity_holds(const PatternReport& rep) {
  const auto n1 = static_cast<std::int64_t>(rep.N - 1);
  return 2 * static_cast<std::int64_t>(rep.agreement(1)) == n1 + rep.corr &&
         2 * static_cast<std::int64_t>(rep.agreement(-1)) == n1 - rep.corr;
}

bool witness_valid(const ArithTable& t, const ShustermanWitness& w) {
  return w.found() && w.a >= 1 && w.b >= 1 && w.a + w.b == w.N && t.lambda(w.a) == -1 &&
         t.lambda(w.b) == -1;
}

void Worker::pattern_row(bool with_stats) {
  Row r;
  r.add("N", i64(N_));
  bool pass = true;
  if (with_stats) {
    const PatternReport rep = pattern_report(table_, N_);
    r.add("corr", rep.corr)
        .add("c_pp", i64(rep.count(1, 1)))
        .add("c_pm", i64(rep.count(1, -1)))
        .add("c_mp", i64(rep.count(-1, 1)))
        .add("c_mm", i64(rep.count(-1, -1)))
        .add("eta", std::int64_t{rep.eta_min})
        .add("e_size", i64(rep.e_size));
    pass = pattern_identity_holds(rep) && rep.count(1, -1) == rep.count(-1, 1);
  }
  if (N_ >= 4 && N_ % 2 == 0) {
    const ShustermanWitness w = shusterman_witness(table_, N_);
    r.add("witness_a", i64(w.a)).add("witness_b", i64(w.b));
    r.add("case_tag", std::string(to_string(w.tag)));
    ++out_.tallies["case_" + std::string(to_string(w.tag))];
    pass = pass && witness_valid(table_, w);
  }
  row(std::move(r), pass);
}

void Worker::pattern_checks() {
  const PatternReport rep = pattern_report(table_, N_);
  record("pattern_identity", {{"eta", 1}}, 2.0 * static_cast<double>(rep.agreement(1)),
         static_cast<double>(N_ - 1) + static_cast<double>(rep.corr), pattern_identity_holds(rep));
  record("pattern_symmetry", {}, static_cast<double>(rep.count(1, -1)),
         static_cast<double>(rep.count(-1, 1)), rep.count(1, -1) == rep.count(-1, 1));
  if (N_ >= 11)
    record("exceptional_nonempty", {}, static_cast<double>(rep.e_size), 1.0, rep.e_size >= 1);
  if (N_ >= 4 && N_ % 2 == 0) {
    const ShustermanWitness w = shusterman_witness(table_, N_);
    ++out_.tallies["case_" + std::string(to_string(w.tag))];
    const double lhs = w.found() ? table_.lambda(w.a) + table_.lambda(w.b) : 0.0;
    record("shusterman_witness", {{"a", i64(w.a)}, {"b", i64(w.b)}}, lhs, -2.0,
           witness_valid(table_, w), 0.0, "case=" + std::string(to_string(w.tag)));
  }
}

/// Ordered tuples (m_1, ..., m_k), k ≥ 2, m_i ≥ 2, with product ≤ bound.
void factor_tuples(std::uint64_t bound, std::vector<std::uint64_t>& prefix, std::uint64_t prod,
                   const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (prefix.size() >= 2) visit(prefix);
  for (std::uint64_t m = 2; prod * m <= bound; ++m) {
    prefix.push_back(m);
    factor_tuples(bound, prefix, prod * m, visit);
    prefix.pop_back();
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t N) {
  return seed ^ (N * 0x9E3779B97F4A7C15ULL);
}

void Worker::dilation_checks(std::uint64_t D) {
  const std::uint64_t bound = D * D;
  const DilationContext ctx(table_, N_, bound);
  const std::uint64_t e = ctx.base().card();
  auto coprime = [&](std::uint64_t m) { return std::gcd(m, N_) == 1; };

  std::vector<std::uint64_t> card(bound + 1, 0);
  for (std::uint64_t m = 2; m <= bound; ++m)
    if (coprime(m)) card[m] = exceptional_set_d(ctx, m).card();

  std::uint64_t tested = 0, non_bijective = 0, gap_violations = 0;
  for (std::uint64_t d = 2; d <= D; ++d) {
    if (!coprime(d)) continue;
    ++tested;
    if (!phi_is_bijection(d, N_)) ++non_bijective;
    const std::uint64_t lo = exceptional_set_d(ctx, d).bits.min_member();
    if (lo != 0 && d * lo < N_) ++gap_violations;
  }
  record("phi_bijection", {{"d_max", i64(D)}, {"tested", i64(tested)}},
         static_cast<double>(non_bijective), 0.0, non_bijective == 0);
  record("initial_gap", {{"d_max", i64(D)}, {"tested", i64(tested)}},
         static_cast<double>(gap_violations), 0.0, gap_violations == 0);

  if (N_ >= 11 && e >= 1) {
    if (std::gcd(N_, std::uint64_t{6}) == 1) {
      record("g2_bound", {{"card_E", i64(e)}, {"card_E2", i64(card[2])}},
             static_cast<double>(card[2]), 2.0 * static_cast<double>(e), card[2] <= 2 * e);
      record("g3_bound", {{"card_E", i64(e)}, {"card_E3", i64(card[3])}},
             static_cast<double>(card[3]), 6.0 * static_cast<double>(e), card[3] <= 6 * e);
    } else {
      ++out_.tallies["g23_unasserted"];
    }
    for (std::uint64_t d = 2; d <= D; ++d) {
      if (!coprime(d)) continue;
      const double rhs = std::ldexp(static_cast<double>(e), static_cast<int>(d * d));
      record("gd_bound", {{"d", i64(d)}, {"card_E", i64(e)}}, static_cast<double>(card[d]), rhs,
             static_cast<double>(card[d]) <= rhs);
    }
  }

  for (std::uint64_t a = 2; a <= D; ++a)
    for (std::uint64_t b = 2; b <= D; ++b)
      if (coprime(a * b)) report(verify_symdiff(ctx, a, b));

  std::uint64_t tuples = 0, violations = 0;
  std::vector<std::uint64_t> prefix;
  factor_tuples(bound, prefix, 1, [&](const std::vector<std::uint64_t>& f) {
    std::uint64_t prod = 1, sum = 0;
    for (std::uint64_t m : f) {
      prod *= m;
      sum += card[m];
    }
    if (!coprime(prod)) return;
    ++tuples;
    if (card[prod] > f.size() * sum) ++violations;
  });
  record("subadditivity", {{"max_product", i64(bound)}, {"tuples", i64(tuples)}},
         static_cast<double>(violations), 0.0, violations == 0);

  std::vector<std::uint64_t> composites;
  for (std::uint64_t R = 4; R <= bound; ++R)
    if (coprime(R) && !table_.is_prime(R)) composites.push_back(R);
  std::mt19937_64 rng(mix_seed(cfg_.seed, N_));
  const std::size_t picks = std::min<std::size_t>(3, composites.size());
  for (std::size_t i = 0; i < picks; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (composites.size() - i));
    std::swap(composites[i], composites[j]);
  }
  std::sort(composites.begin(), composites.begin() + static_cast<std::ptrdiff_t>(picks));
  for (std::size_t i = 0; i < picks; ++i) report(verify_composite_bound(ctx, composites[i]));
}

void Worker::spectral_checks(std::uint64_t D) {
  const Spectrum spec = spectrum(table_, N_);
  const double tol = spectral_tolerance(N_);
  const double mass = plancherel_mass(spec);
  const double n1 = static_cast<double>(N_ - 1);
  record("plancherel", {{"method", spec.method == DftMethod::direct ? 0 : 1}}, mass, n1,
         std::abs(mass - n1) <= tol, tol);

  double asym = 0.0;
  for (std::uint64_t a = 1; a < N_; ++a)
    asym = std::max(asym, std::abs(spec.coeffs[N_ - a] - std::conj(spec.coeffs[a])));
  record("conjugate_symmetry", {}, asym, 0.0, asym <= tol, tol);

  const DilationContext ctx(table_, N_, D);
  for (std::uint64_t d = 2; d <= D; ++d) {
    if (std::gcd(d, N_) != 1) continue;
    const double defect = dilation_defect(spec, table_, d);
    const double target = 4.0 * static_cast<double>(exceptional_set_d(ctx, d).card());
    record("dilation_defect", {{"d", i64(d)}}, defect, target, std::abs(defect - target) <= tol,
           tol);
  }
}

void Worker::character_checks() {
  const CharacterTable ct = build_characters(N_);
  if (N_ <= 200) {
    const double err = orthogonality_error(ct);
    record("character_orthogonality", {{"root", i64(ct.root())}}, err, 0.0, err <= 1e-9, 1e-9);
  }
  const std::vector<cplx> sums = twisted_sums(ct, table_);
  double total = 0.0;
  for (const cplx& s : sums) total += std::norm(s);
  const double n1 = static_cast<double>(N_ - 1);
  const double tol = 1e-9 * n1 * n1;
  record("twisted_parseval", {{"root", i64(ct.root())}}, total, n1 * n1,
         std::abs(total - n1 * n1) <= tol, tol);

  const std::vector<std::uint64_t> ps = primes_between(table_, prm_.P);
  if (std::find(ps.begin(), ps.end(), N_) == ps.end())
    report(verify_ep_decomposition(ct, table_, prm_.P));
  else
    ++out_.tallies["character_decomposition_skipped"];
}

void Worker::pierce_checks() {
  const std::uint64_t p = prm_.p;
  std::uint64_t failures = 0, overflows = 0, max_k = 0;
  for (std::uint64_t n = 1; n < N_; ++n) {
    const PierceSignature sig = p_signature(n, N_, p);
    max_k = std::max<std::uint64_t>(max_k, sig.k());
    try {
      const Reconstruction rec = reconstruct(sig.digits, sig.residual(), N_);
      if (!rec.in_range || rec.value() != static_cast<std::int64_t>(n)) ++failures;
    } catch (const std::overflow_error&) {
      ++overflows;
      ++failures;
    }
  }
  record("pierce_roundtrip", {{"p", i64(p)}, {"max_k", i64(max_k)}, {"overflows", i64(overflows)}},
         static_cast<double>(failures), 0.0, failures == 0);
  const DilationContext ctx(table_, N_, p);
  report(verify_product_formula(ctx, p, true));
}

void Worker::nu_rows() {
  for (const NuMomentRow& r : nu_moment_sweep(N_, prm_.r)) {
    if (r.flagged) ++out_.tallies["nu_ratio_flagged"];
    Row rec;
    rec.add("N", i64(r.N)).add("r", i64(r.r)).add("moment", i64(r.moment)).add("ratio", r.ratio);
    out_.rows.emplace_back(std::string{}, std::move(rec));
  }
  // The pointwise bound is assertable but has no column in this schema.
  nu_checks();
  out_.rows.erase(std::remove_if(out_.rows.begin(), out_.rows.end(),
                                 [](const auto& kv) { return !kv.first.empty(); }),
                  out_.rows.end());
}

void Worker::nu_checks() {
  const std::vector<NuStats> all = nu_scan_all(N_, prm_.r);
  std::uint64_t violations = 0, worst = 0;
  for (const NuStats& s : all) {
    const std::uint64_t cap = s.r >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (s.r - 1);
    for (std::uint64_t v : s.values) {
      if (v > cap) ++violations;
      worst = std::max(worst, v);
    }
  }
  record("nu_pointwise", {{"r_max", i64(prm_.r)}, {"max_nu", i64(worst)}},
         static_cast<double>(violations), 0.0, violations == 0);

  const std::uint64_t r_oracle = std::min<std::uint64_t>(prm_.r, 12);
  std::uint64_t mismatches = 0;
  for (std::uint64_t r = 1; r <= r_oracle; ++r)
    if (nu_compute(N_, r, NuMode::subset_oracle).values != all[r - 1].values) ++mismatches;
  record("nu_mode_agreement", {{"r_max", i64(r_oracle)}}, static_cast<double>(mismatches), 0.0,
         mismatches == 0);
}

void Worker::discrepancy_rows() {
  const DilationContext ctx(table_, N_, prm_.d);
  for (std::uint64_t b = 2; b <= prm_.d; ++b) {
    if (std::gcd(b, N_) != 1) continue;
    const ExceptionalSet E = exceptional_set_d(ctx, b);
    if (E.bits.empty()) {
      ++out_.tallies["empty_set"];
      continue;
    }
    const DiscrepancyReport rep = discrepancy_report(E.bits, b, prm_.K);
    Row rec;
    rec.add("set_id", "E_" + std::to_string(b))
        .add("N", i64(N_))
        .add("b", i64(b))
        .add("card", i64(rep.card))
        .add("star", rep.star)
        .add("et_bound", rep.et_bound)
        .add("K", i64(rep.K));
    row(std::move(rec), rep.interval <= rep.et_bound && rep.star <= rep.interval);
  }
}

void Worker::discrepancy_checks() {
  const DilationContext ctx(table_, N_, std::max(prm_.d, prm_.T));
  for (std::uint64_t b = 2; b <= prm_.d; ++b) {
    if (std::gcd(b, N_) != 1) continue;
    const ExceptionalSet E = exceptional_set_d(ctx, b);
    if (!E.bits.empty()) {
      const DiscrepancyReport rep = discrepancy_report(E.bits, b, prm_.K);
      record("erdos_turan", {{"b", i64(b)}, {"K", i64(prm_.K)}, {"card", i64(rep.card)}},
             rep.interval, rep.et_bound, rep.interval <= rep.et_bound && rep.star <= rep.interval);
    }
    bool coprime_friable = true;
    for (std::uint64_t a : friable_enumerate(table_, prm_.T, prm_.q).members)
      if (std::gcd(a, N_) != 1) coprime_friable = false;
    if (coprime_friable) report(friable_average_check(ctx, b, prm_.T, prm_.q, 1));
  }
}

void Worker::run() {
  switch (cfg_.command) {
    case Command::patterns:
      pattern_row(true);
      break;
    case Command::shusterman:
      pattern_row(false);
      break;
    case Command::dilation:
      dilation_checks(prm_.d);
      break;
    case Command::spectral:
      spectral_checks(prm_.d);
      break;
    case Command::characters:
      character_checks();
      break;
    case Command::pierce:
      pierce_checks();
      break;
    case Command::nu_moment:
      nu_rows();
      break;
    case Command::discrepancy:
      discrepancy_rows();
      break;
    case Command::full_suite: {
      const bool prime = table_.is_prime(N_);
      pattern_checks();
      dilation_checks(prm_.d);
      spectral_checks(prm_.d);
      if (prime) {
        character_checks();
        if (N_ > prm_.p) pierce_checks();
        if (N_ >= 5) {
          nu_checks();
          discrepancy_checks();
        }
      }
      break;
    }
  }
  std::stable_sort(out_.rows.begin(), out_.rows.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [k, c] : kCommands)
    if (k == name) return c;
  return std::nullopt;
}

std::string_view to_string(Command c) noexcept {
  for (const auto& [k, v] : kCommands)
    if (v == c) return k;
  return "?";
}

void validate(const CampaignConfig& c) {
  const NRange& r = c.n_range;
  if (r.start > r.end)
    throw ConfigError("empty N range: start " + std::to_string(r.start) + " > end " +
                      std::to_string(r.end));
  if (r.end < 3) throw ConfigError("empty N range: every command needs N >= 3");
  if (r.step == 0) throw ConfigError("step must be >= 1");
  if (c.threads < 0) throw ConfigError("threads must be >= 0");

  const Resolved p = resolve(c);
  if (p.d < 2) throw ConfigError("--d must be >= 2");
  if (p.d > 64) throw ConfigError("--d must be <= 64");
  if (p.p < 2) throw ConfigError("--p must be >= 2");
  if (p.r < 2 || p.r > 64) throw ConfigError("--r must be in [2, 64]");
  if (p.T < 1) throw ConfigError("--T must be >= 1");
  if (p.q < 2) throw ConfigError("--q must be >= 2");
  if (p.K < 1) throw ConfigError("--K must be >= 1");
  if (p.P < 1) throw ConfigError("--P must be >= 1");

  const std::uint64_t need = required_table_size(c);
  if (need > kMaxTableSize)
    throw ConfigError("campaign needs an arith table with n_max >= " + std::to_string(need) +
                      ", above the supported " + std::to_string(kMaxTableSize));
}

std::uint64_t required_table_size(const CampaignConfig& c) {
  const Resolved p = resolve(c);
  const std::uint64_t m = multiplier(c.command, p);
  const std::uint64_t end = std::max<std::uint64_t>(c.n_range.end, 3);
  if (m > 0 && end > kMaxTableSize / m) return kMaxTableSize + 1;
  return std::max({end * m, end, p.T});
}

std::vector<std::uint64_t> campaign_moduli(const CampaignConfig& c, const ArithTable& table) {
  const Resolved p = resolve(c);
  const NRange& r = c.n_range;
  table.require(r.end);
  std::vector<std::uint64_t> out;
  for (std::uint64_t N = r.start; N <= r.end; N += r.step) {
    if ((!r.primes_only || table.is_prime(N)) && applies(c.command, p, table, N)) out.push_back(N);
    if (r.end - N < r.step) break;
  }
  return out;
}

ArithTable obtain_table(std::uint64_t n_max) {
  const char* dir = std::getenv("LLAB_TABLE_CACHE");
  if (dir == nullptr || *dir == '\0') return build_table(n_max);
  const std::filesystem::path path =
      std::filesystem::path(dir) / ("arith_" + std::to_string(n_max) + ".bin");
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      ArithTable t = load_table(path);
      if (t.n_max() == n_max) return t;
    } catch (const std::exception&) {
      // Corrupt or stale cache entries are rebuilt below.
    }
  }
  ArithTable t = build_table(n_max);
  try {
    std::filesystem::create_directories(dir, ec);
    save_table(t, path);
  } catch (const std::exception&) {
    // The cache is an optimisation; an unwritable directory is not an error.
  }
  return t;
}

CampaignResult run_campaign(const CampaignConfig& config, const ArithTable* table) {
  validate(config);
  const std::uint64_t need = required_table_size(config);
  ArithTable owned;
  if (table == nullptr) {
    owned = obtain_table(need);
    table = &owned;
  } else if (table->n_max() < need) {
    throw ConfigError("campaign needs an arith table with n_max >= " + std::to_string(need) +
                      ", have " + std::to_string(table->n_max()));
  }

  const std::vector<std::uint64_t> moduli = campaign_moduli(config, *table);
  if (moduli.empty())
    throw ConfigError("empty N range: no N in [" + std::to_string(config.n_range.start) + ", " +
                      std::to_string(config.n_range.end) + "] applies to command " +
                      std::string(to_string(config.command)));

  const Resolved params = resolve(config);
  std::vector<Outcome> outcomes(moduli.size());
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(moduli.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    Outcome& out = outcomes[static_cast<std::size_t>(i)];
    try {
      Worker(config, params, *table, moduli[static_cast<std::size_t>(i)], out).run();
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  }

  CampaignResult res;
  res.header = header_for(config.command);
  res.table_size = table->n_max();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Outcome& out = outcomes[i];
    for (auto& kv : out.rows) res.rows.push_back(std::move(kv.second));
    res.checks += out.checks;
    res.failures += out.failures;
    for (const auto& [k, v] : out.tallies) res.tallies[k] += v;
    if (!out.error.empty()) {
      ++res.failures;
      res.errors.push_back("N=" + std::to_string(moduli[i]) + ": " + out.error);
    }
  }
  return res;
}

}  // namespace llab
