#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "revgenus/sigperm.hpp"

namespace revgenus {

inline constexpr int kDefaultMaxOracleN = 7;
inline constexpr int kHardMaxOracleN = 8;

/// Dense index of a signed permutation: Lehmer rank of |b| times 2^n plus the
/// sign mask (bit k set when entry k+1 is negative).
std::uint64_t rank(const SignedPermutation& b);
SignedPermutation unrank(int n, std::uint64_t r);

/// Reversal distance of every signed permutation of size n, one byte each.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(int n, std::vector<std::uint8_t> dist);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return dist_.size(); }
  int at(const SignedPermutation& b) const;
  int at_rank(std::uint64_t r) const { return dist_[r]; }
  int diameter() const;
  const std::vector<std::uint8_t>& bytes() const noexcept { return dist_; }

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

/// Breadth-first search from the identity. Throws SizeTooLarge when n is
/// negative or above max_n (which itself may not exceed kHardMaxOracleN).
DistanceTable bfs_table(int n, int max_n = kDefaultMaxOracleN);

/// Looks b up in a per-size table built on first use.
int oracle_distance(const SignedPermutation& b, int max_n = kDefaultMaxOracleN);

/// Binary cache: "RVDT", format version byte, n byte, then one byte per state.
void save_table(const DistanceTable& t, std::ostream& out);
DistanceTable load_table(std::istream& in);

}  // namespace revgenus
