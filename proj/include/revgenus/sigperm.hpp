#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revgenus {

/// The reversal rho(i,j): positions i..j (1-based, inclusive) are put in
/// reverse order and every sign in the segment is negated.
struct Reversal {
  int i = 1;
  int j = 1;

  friend bool operator==(const Reversal&, const Reversal&) = default;
  friend auto operator<=>(const Reversal&, const Reversal&) = default;
};

std::string to_string(Reversal r);

/// A signed permutation of {1..n}, stored as its 1-line notation.
///
/// Immutable once constructed; the constructor rejects zero entries and any
/// sequence whose absolute values are not exactly {1..n}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);

  /// The group element of rho(i,j) in the hyperoctahedral group of rank n.
  static SignedPermutation reversal_element(int n, Reversal r);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 1-based access, matching the usual notation b = [b_1, ..., b_n].
  int at(int position) const;

  std::span<const int> entries() const noexcept { return entries_; }

  bool is_identity() const noexcept;

  /// "[-5,+1,-3]" style; the empty permutation prints as "[]".
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Accepts signed decimal integers separated by commas and/or whitespace,
/// optionally wrapped in [] or (). A leading '+' is optional.
SignedPermutation parse(std::string_view text);

SignedPermutation apply_reversal(const SignedPermutation& b, Reversal r);

/// Group product with right action on positions: (a*b)_k = sign(b_k) * a_{|b_k|}.
/// compose(b, reversal_element(n, r)) == apply_reversal(b, r).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation inverse(const SignedPermutation& b);

/// Folds apply_reversal over the sequence.
SignedPermutation apply_reversals(SignedPermutation b, std::span<const Reversal> rs);

}  // namespace revgenus
