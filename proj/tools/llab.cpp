#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "llab/campaign.hpp"
#include "llab/error.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification campaigns for Liouville sign patterns and dilation identities"};
  app.set_version_flag("--version", "llab 1.0");

  std::string command;
  std::uint64_t n_start = 0, n_end = 0, step = 1, seed = 0;
  bool primes_only = false;
  int threads = 0;
  std::string format = "csv";
  std::string out;
  std::map<std::string, std::uint64_t> values;

  app.add_option("command", command, "Campaign to run")
      ->required()
      ->check(CLI::IsMember({"patterns", "shusterman", "dilation", "spectral", "characters",
                             "pierce", "nu-moment", "discrepancy", "full-suite"}));
  app.add_option("--n-start", n_start, "First N")->required();
  app.add_option("--n-end", n_end, "Last N (inclusive)")->required();
  app.add_option("--step", step, "Stride through the N range")->check(CLI::PositiveNumber);
  app.add_flag("--primes-only", primes_only, "Visit prime N only");

  std::map<std::string, CLI::Option*> param_opts;
  for (const char* name : {"d", "p", "r", "T", "q", "K", "P"})
    param_opts[name] = app.add_option(std::string("--") + name, values[name]);
  param_opts["d"]->description("Largest dilation factor");
  param_opts["p"]->description("Pierce truncation digit");
  param_opts["r"]->description("Largest Pierce digit for nu statistics");
  param_opts["T"]->description("Friable bound");
  param_opts["q"]->description("Friable prime cap");
  param_opts["K"]->description("Erdos-Turan frequency cutoff");
  param_opts["P"]->description("Prime window (P, 2P] for the character identity");

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "Output file")->required();
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for sampled sub-selections");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  llab::CampaignConfig cfg;
  cfg.command = *llab::parse_command(command);
  cfg.n_range = {n_start, n_end, step, primes_only};
  cfg.output = out;
  cfg.format = format == "json" ? llab::Format::json : llab::Format::csv;
  cfg.seed = seed;
  cfg.threads = threads;
  auto take = [&](const char* name, std::optional<std::uint64_t>& slot) {
    if (param_opts[name]->count() > 0) slot = values[name];
  };
  take("d", cfg.params.d);
  take("p", cfg.params.p);
  take("r", cfg.params.r);
  take("T", cfg.params.T);
  take("q", cfg.params.q);
  take("K", cfg.params.K);
  take("P", cfg.params.P);

  llab::CampaignResult res;
  try {
    res = llab::run_campaign(cfg);
  } catch (const llab::ConfigError& e) {
    std::cerr << "llab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const llab::TableTooSmall& e) {
    std::cerr << "llab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    llab::emit(cfg.output, cfg.format, res.header, res.rows);
  } catch (const std::exception& e) {
    std::cerr << "llab: " << e.what() << '\n';
    return kExitIo;
  }

  for (const std::string& err : res.errors) std::cerr << "llab: error: " << err << '\n';
  std::cerr << "llab: " << command << ": " << res.checks << " checks, " << res.failures
            << " failed, table n_max=" << res.table_size << '\n';
  for (const auto& [k, v] : res.tallies) std::cerr << "  " << k << " = " << v << '\n';
  return res.exit_status();
}
