#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace llab {

// Invalid arguments are reported with std::invalid_argument; the types below
// cover the remaining failure kinds so callers can tell them apart.

/// λ(x) was needed for some x beyond the sieve bound.
class TableTooSmall : public std::runtime_error {
 public:
  TableTooSmall(std::uint64_t required, std::uint64_t available)
      : std::runtime_error("arith table too small: need n_max >= " + std::to_string(required) +
                           ", have " + std::to_string(available)),
        required_(required),
        available_(available) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t available() const noexcept { return available_; }

 private:
  std::uint64_t required_;
  std::uint64_t available_;
};

/// g(d) requested while |E(N)| = 0.
class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Discrepancy of an empty point set.
class UndefinedDiscrepancy : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search that a proven theorem guarantees to succeed came back empty.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace llab
