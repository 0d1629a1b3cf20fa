#include "llab/arith.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "llab/error.hpp"

namespace llab {

namespace {

constexpr std::array<char, 8> kMagic = {'L', 'L', 'A', 'B', 'A', 'R', 'T', 'H'};

template <class T>
void put_le(std::ostream& os, T v) {
  std::array<char, sizeof(T)> buf{};
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf.data(), buf.size());
}

template <class T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void ArithTable::require(std::uint64_t n) const {
  if (n > n_max_) throw TableTooSmall(n, n_max_);
}

ArithTable build_table(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("build_table: n_max must be >= 1");
  if (n_max > kMaxTableSize)
    throw std::invalid_argument("build_table: n_max exceeds 2^31 (" + std::to_string(n_max) + ")");

  ArithTable t;
  t.n_max_ = n_max;
  const std::size_t size = static_cast<std::size_t>(n_max) + 1;
  t.lambda_.assign(size, 1);
  t.omega_.assign(size, 0);
  t.pplus_.assign(size, 1);

  // spf[n] = smallest prime factor; each composite is visited exactly once.
  std::vector<std::uint32_t> spf(size, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (spf[n] == 0) {
      spf[n] = static_cast<std::uint32_t>(n);
      primes.push_back(static_cast<std::uint32_t>(n));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[n] || n * p > n_max) break;
      spf[n * p] = p;
    }
  }
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t rest = n / spf[n];
    t.omega_[n] = static_cast<std::uint8_t>(t.omega_[rest] + 1);
    t.pplus_[n] = std::max<std::uint32_t>(t.pplus_[rest], spf[n]);
    t.lambda_[n] = static_cast<std::int8_t>(-t.lambda_[rest]);
  }
  return t;
}

ArithValue arith_query(const ArithTable& table, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("arith_query: n must be >= 1");
  table.require(n);
  return {table.lambda(n), table.omega(n), table.pplus(n)};
}

FriableSet friable_enumerate(const ArithTable& table, std::uint64_t T, std::uint64_t q) {
  if (T < 1 || q < 1) throw std::invalid_argument("friable_enumerate: T and q must be >= 1");
  table.require(T);
  FriableSet fs{T, q, {}};
  for (std::uint64_t n = 1; n <= T; ++n)
    if (table.pplus(n) <= q) fs.members.push_back(n);
  return fs;
}

std::vector<std::uint64_t> primes_between(const ArithTable& table, std::uint64_t P) {
  table.require(2 * P);
  return primes_in_range(table, P + 1, 2 * P);
}

std::vector<std::uint64_t> primes_in_range(const ArithTable& table, std::uint64_t lo,
                                           std::uint64_t hi) {
  table.require(hi);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
    if (table.is_prime(n)) out.push_back(n);
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(const ArithTable& table,
                                                          std::uint64_t n) {
  table.require(n);
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    const std::uint64_t p = table.pplus(n);
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void save_table(const ArithTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("save_table: cannot open " + path.string());
  const std::uint64_t n = table.n_max();
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, kTableCacheVersion);
  put_le<std::uint64_t>(os, n);

  std::vector<char> bits((n + 7) / 8, 0);
  for (std::uint64_t i = 1; i <= n; ++i)
    if (table.lambda(i) < 0) bits[(i - 1) / 8] = static_cast<char>(bits[(i - 1) / 8] | (1 << ((i - 1) % 8)));
  os.write(bits.data(), static_cast<std::streamsize>(bits.size()));

  std::vector<char> omega(n);
  for (std::uint64_t i = 1; i <= n; ++i) omega[i - 1] = static_cast<char>(table.omega(i));
  os.write(omega.data(), static_cast<std::streamsize>(omega.size()));

  for (std::uint64_t i = 1; i <= n; ++i) put_le<std::uint32_t>(os, table.pplus(i));
  if (!os) throw std::runtime_error("save_table: write failed for " + path.string());
}

ArithTable load_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_table: cannot open " + path.string());
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(is)), {});
  constexpr std::size_t header = 8 + 4 + 8;
  if (data.size() < header || std::memcmp(data.data(), kMagic.data(), kMagic.size()) != 0)
    throw std::runtime_error("load_table: bad magic in " + path.string());
  if (get_le<std::uint32_t>(data.data() + 8) != kTableCacheVersion)
    throw std::runtime_error("load_table: unsupported version in " + path.string());
  const auto n = get_le<std::uint64_t>(data.data() + 12);
  if (n == 0 || n > kMaxTableSize) throw std::runtime_error("load_table: bad n_max");
  const std::size_t bits_len = (n + 7) / 8;
  if (data.size() != header + bits_len + n + 4 * n)
    throw std::runtime_error("load_table: truncated file " + path.string());

  ArithTable t;
  t.n_max_ = n;
  t.lambda_.assign(n + 1, 1);
  t.omega_.assign(n + 1, 0);
  t.pplus_.assign(n + 1, 1);
  const unsigned char* bits = data.data() + header;
  const unsigned char* omega = bits + bits_len;
  const unsigned char* pplus = omega + n;
  for (std::uint64_t i = 1; i <= n; ++i) {
    t.lambda_[i] = ((bits[(i - 1) / 8] >> ((i - 1) % 8)) & 1) ? -1 : 1;
    t.omega_[i] = omega[i - 1];
    t.pplus_[i] = get_le<std::uint32_t>(pplus + 4 * (i - 1));
  }
  return t;
}

}  // namespace llab
