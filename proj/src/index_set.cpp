#include "llab/index_set.hpp"

#include <bit>
#include <stdexcept>

namespace llab {

IndexSet::IndexSet(std::uint64_t N) : N_(N), words_((N + 63) / 64, 0) {}

IndexSet::IndexSet(std::uint64_t N, std::vector<std::uint64_t> words)
    : N_(N), words_(std::move(words)) {
  if (words_.size() != (N + 63) / 64) throw std::invalid_argument("IndexSet: word count mismatch");
  if (!words_.empty()) {
    words_[0] &= ~std::uint64_t{1};
    if (N % 64) words_.back() &= (std::uint64_t{1} << (N % 64)) - 1;
  }
  recount();
}

void IndexSet::insert(std::uint64_t n) {
  if (n == 0 || n >= N_) throw std::out_of_range("IndexSet::insert: index outside (0, N)");
  auto& w = words_[n >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (n & 63);
  if (!(w & bit)) {
    w |= bit;
    ++card_;
  }
}

void IndexSet::erase(std::uint64_t n) {
  if (n >= N_) return;
  auto& w = words_[n >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (n & 63);
  if (w & bit) {
    w &= ~bit;
    --card_;
  }
}

std::vector<std::uint64_t> IndexSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(card_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t IndexSet::min_member() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[i]));
  return 0;
}

IndexSet IndexSet::symmetric_difference(const IndexSet& other) const {
  if (N_ != other.N_) throw std::invalid_argument("IndexSet: modulus mismatch");
  std::vector<std::uint64_t> w(words_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] ^ other.words_[i];
  return IndexSet(N_, std::move(w));
}

IndexSet IndexSet::intersection(const IndexSet& other) const {
  if (N_ != other.N_) throw std::invalid_argument("IndexSet: modulus mismatch");
  std::vector<std::uint64_t> w(words_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] & other.words_[i];
  return IndexSet(N_, std::move(w));
}

void IndexSet::recount() {
  card_ = 0;
  for (std::uint64_t w : words_) card_ += static_cast<std::uint64_t>(std::popcount(w));
}

}  // namespace llab
