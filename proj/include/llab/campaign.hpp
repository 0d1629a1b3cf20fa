#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "llab/arith.hpp"
#include "llab/report.hpp"

namespace llab {

enum class Command {
  patterns,
  shusterman,
  dilation,
  spectral,
  characters,
  pierce,
  nu_moment,
  discrepancy,
  full_suite,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c) noexcept;

struct NRange {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::uint64_t step = 1;
  bool primes_only = false;
};

/// Command-specific integers; unset ones take per-command defaults.
struct CampaignParams {
  std::optional<std::uint64_t> d, p, r, T, q, K, P;
};

struct CampaignConfig {
  Command command = Command::patterns;
  NRange n_range;
  CampaignParams params;
  std::filesystem::path output;
  Format format = Format::csv;
  std::uint64_t seed = 0;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

/// Invalid configuration; the CLI maps it to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CampaignResult {
  std::vector<std::string> header;
  std::vector<Row> rows;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t table_size = 0;
  /// Report-only tallies (witness case distribution, flagged ratios, ...).
  std::map<std::string, std::uint64_t> tallies;
  /// Unexpected exceptions, one message per affected N; each counts as a failure.
  std::vector<std::string> errors;

  int exit_status() const noexcept { return failures == 0 ? 0 : 1; }
};

/// Throws ConfigError describing the first problem found.
void validate(const CampaignConfig& config);

/// The N values the campaign visits: the range filtered to those the command
/// applies to (prime N, even N, ...). Primality comes from the sieve.
std::vector<std::uint64_t> campaign_moduli(const CampaignConfig& config, const ArithTable& table);

/// Sieve bound needed for every check the campaign will run.
std::uint64_t required_table_size(const CampaignConfig& config);

/// Runs every check for every N, fanning N values out over OpenMP workers.
/// Records come back ordered by (N, check id) whatever the completion order.
/// A supplied table must cover required_table_size(config).
CampaignResult run_campaign(const CampaignConfig& config, const ArithTable* table = nullptr);

/// Loads the table from $LLAB_TABLE_CACHE when present, else sieves (and
/// stores into the cache directory if one is configured).
ArithTable obtain_table(std::uint64_t n_max);

}  // namespace llab
