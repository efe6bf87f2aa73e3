#include "revgenus/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>

#include "revgenus/error.hpp"

namespace revgenus {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;
constexpr std::uint8_t kFormatVersion = 1;
constexpr std::array<char, 4> kMagic{'R', 'V', 'D', 'T'};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Entries are signed values in +-1..+-n.
std::uint64_t rank_of(const int* v, int n) {
  std::uint32_t used = 0;
  std::uint64_t lehmer = 0;
  std::uint32_t signs = 0;
  for (int k = 0; k < n; ++k) {
    const int a = std::abs(v[k]) - 1;
    const int smaller_unused = a - std::popcount(used & ((1u << a) - 1u));
    lehmer = lehmer * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << a;
    if (v[k] < 0) signs |= 1u << k;
  }
  return (lehmer << n) | signs;
}

void unrank_into(std::uint64_t r, int n, int* v) {
  const std::uint32_t signs = static_cast<std::uint32_t>(r & ((1ull << n) - 1));
  std::uint64_t lehmer = r >> n;
  std::array<int, 16> digit{};
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t radix = static_cast<std::uint64_t>(n - k);
    digit[k] = static_cast<int>(lehmer % radix);
    lehmer /= radix;
  }
  std::uint32_t used = 0;
  for (int k = 0; k < n; ++k) {
    int a = 0;
    for (int skip = digit[k];; ++a) {
      if (used & (1u << a)) continue;
      if (skip == 0) break;
      --skip;
    }
    used |= 1u << a;
    v[k] = (signs & (1u << k)) ? -(a + 1) : a + 1;
  }
}

}  // namespace

std::uint64_t rank(const SignedPermutation& b) { return rank_of(b.entries().data(), b.size()); }

SignedPermutation unrank(int n, std::uint64_t r) {
  if (n < 0 || n > 16) throw Error(Errc::SizeTooLarge, "n=" + std::to_string(n));
  std::vector<int> v(static_cast<std::size_t>(n));
  unrank_into(r, n, v.data());
  return SignedPermutation(std::move(v));
}

DistanceTable::DistanceTable(int n, std::vector<std::uint8_t> dist) : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != (factorial(n) << n)) throw Error(Errc::BadCache, "table size does not match n");
}

int DistanceTable::at(const SignedPermutation& b) const {
  if (b.size() != n_) throw Error(Errc::LengthMismatch, "table is for n=" + std::to_string(n_));
  return dist_[rank(b)];
}

int DistanceTable::diameter() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceTable bfs_table(int n, int max_n) {
  if (max_n > kHardMaxOracleN) max_n = kHardMaxOracleN;
  if (n < 0 || n > max_n)
    throw Error(Errc::SizeTooLarge, "n=" + std::to_string(n) + " exceeds the oracle cap " + std::to_string(max_n));
  const std::uint64_t states = factorial(n) << n;
  std::vector<std::uint8_t> dist(states, kUnvisited);
  std::array<int, 16> id{};
  for (int k = 0; k < n; ++k) id[k] = k + 1;
  const std::uint64_t start = rank_of(id.data(), n);
  dist[start] = 0;

  std::vector<std::uint64_t> frontier{start}, next;
  std::array<int, 16> v{}, w{};
  for (std::uint8_t d = 0; !frontier.empty(); ++d) {
    next.clear();
    for (std::uint64_t r : frontier) {
      unrank_into(r, n, v.data());
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          w = v;
          for (int k = 0; k <= j - i; ++k) w[i + k] = -v[j - k];
          const std::uint64_t s = rank_of(w.data(), n);
          if (dist[s] == kUnvisited) {
            dist[s] = static_cast<std::uint8_t>(d + 1);
            next.push_back(s);
          }
        }
    }
    frontier.swap(next);
  }
  return DistanceTable(n, std::move(dist));
}

int oracle_distance(const SignedPermutation& b, int max_n) {
  static std::mutex mu;
  static std::map<int, DistanceTable> tables;
  const int n = b.size();
  if (n > std::min(max_n, kHardMaxOracleN))
    throw Error(Errc::SizeTooLarge, "n=" + std::to_string(n) + " exceeds the oracle cap");
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, bfs_table(n, max_n)).first;
  return it->second.at(b);
}

void save_table(const DistanceTable& t, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kFormatVersion));
  out.put(static_cast<char>(t.n()));
  out.write(reinterpret_cast<const char*>(t.bytes().data()), static_cast<std::streamsize>(t.size()));
  if (!out) throw Error(Errc::BadCache, "write failed");
}

DistanceTable load_table(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(Errc::BadCache, "bad magic");
  const int version = in.get();
  const int n = in.get();
  if (!in || version != kFormatVersion) throw Error(Errc::BadCache, "unsupported version");
  if (n < 0 || n > kHardMaxOracleN) throw Error(Errc::BadCache, "n out of range");
  std::vector<std::uint8_t> dist(factorial(n) << n);
  in.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(dist.size()));
  if (in.gcount() != static_cast<std::streamsize>(dist.size())) throw Error(Errc::BadCache, "truncated table");
  if (in.peek() != std::char_traits<char>::eof()) throw Error(Errc::BadCache, "trailing bytes");
  return DistanceTable(n, std::move(dist));
}

}  // namespace revgenus
