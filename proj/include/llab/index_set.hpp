#pragma once

#include <cstdint>
#include <vector>

namespace llab {

/// Bit-set over {1, ..., N-1} in 64-bit words with a cached cardinality.
/// Bit 0 exists but is never set.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint64_t N);

  /// Builds from a word array produced by a kernel; recounts the cardinality.
  IndexSet(std::uint64_t N, std::vector<std::uint64_t> words);

  std::uint64_t modulus() const noexcept { return N_; }
  std::uint64_t size() const noexcept { return card_; }
  bool empty() const noexcept { return card_ == 0; }

  bool contains(std::uint64_t n) const noexcept {
    return n < N_ && ((words_[n >> 6] >> (n & 63)) & 1u);
  }

  void insert(std::uint64_t n);
  void erase(std::uint64_t n);

  std::vector<std::uint64_t> members() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Lowest member, or 0 when empty.
  std::uint64_t min_member() const noexcept;

  IndexSet symmetric_difference(const IndexSet& other) const;
  IndexSet intersection(const IndexSet& other) const;

  bool operator==(const IndexSet& other) const noexcept {
    return N_ == other.N_ && words_ == other.words_;
  }

 private:
  void recount();

  std::uint64_t N_ = 0;
  std::uint64_t card_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace llab
