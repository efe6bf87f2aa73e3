#include "revgenus/sigperm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "revgenus/error.hpp"

namespace revgenus {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedToken: return "MalformedToken";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAFatgraph: return "NotAFatgraph";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::MalformedPiMap: return "MalformedPiMap";
    case Errc::NotExternal: return "NotExternal";
    case Errc::NotNonOrientable: return "NotNonOrientable";
    case Errc::NoHurdles: return "NoHurdles";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::BadCache: return "BadCache";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::string to_string(Reversal r) {
  std::ostringstream os;
  os << "\xCF\x81(" << r.i << ',' << r.j << ')';
  return os.str();
}

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int e : entries_) {
    if (e == 0) throw Error(Errc::NotAPermutation, "zero entry");
    const int a = std::abs(e);
    if (a > n) throw Error(Errc::NotAPermutation, "value " + std::to_string(a) + " exceeds n=" + std::to_string(n));
    if (seen[a]) throw Error(Errc::NotAPermutation, "duplicate value " + std::to_string(a));
    seen[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative length");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::reversal_element(int n, Reversal r) {
  return apply_reversal(identity(n), r);
}

int SignedPermutation::at(int position) const {
  if (position < 1 || position > size())
    throw Error(Errc::IndexOutOfRange, "position " + std::to_string(position));
  return entries_[position - 1];
}

bool SignedPermutation::is_identity() const noexcept {
  for (int k = 0; k < size(); ++k)
    if (entries_[k] != k + 1) return false;
  return true;
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (int k = 0; k < size(); ++k) {
    if (k) s += ',';
    if (entries_[k] > 0) s += '+';
    s += std::to_string(entries_[k]);
  }
  s += ']';
  return s;
}

SignedPermutation parse(std::string_view text) {
  std::vector<int> values;
  std::size_t p = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == '[' || c == ']' || c == '(' || c == ')' ||
           std::isspace(static_cast<unsigned char>(c));
  };
  while (p < text.size()) {
    if (is_sep(text[p])) {
      ++p;
      continue;
    }
    std::size_t q = p;
    while (q < text.size() && !is_sep(text[q])) ++q;
    std::string_view tok = text.substr(p, q - p);
    std::string_view digits = tok;
    bool negative = false;
    if (digits.front() == '+' || digits.front() == '-') {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits.front())) || ec != std::errc() || end != digits.data() + digits.size())
      throw Error(Errc::MalformedToken, "'" + std::string(tok) + "'");
    values.push_back(negative ? -value : value);
    p = q;
  }
  return SignedPermutation(std::move(values));
}

SignedPermutation apply_reversal(const SignedPermutation& b, Reversal r) {
  if (r.i < 1 || r.i > r.j || r.j > b.size())
    throw Error(Errc::IndexOutOfRange, to_string(r) + " on length " + std::to_string(b.size()));
  std::vector<int> v(b.entries().begin(), b.entries().end());
  std::reverse(v.begin() + (r.i - 1), v.begin() + r.j);
  for (int k = r.i - 1; k < r.j; ++k) v[k] = -v[k];
  return SignedPermutation(std::move(v));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size())
    throw Error(Errc::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int k = 0; k < a.size(); ++k) {
    const int e = b.entries()[k];
    const int src = a.entries()[std::abs(e) - 1];
    v[k] = e < 0 ? -src : src;
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation inverse(const SignedPermutation& b) {
  std::vector<int> v(static_cast<std::size_t>(b.size()));
  for (int k = 0; k < b.size(); ++k) {
    const int e = b.entries()[k];
    v[std::abs(e) - 1] = e < 0 ? -(k + 1) : (k + 1);
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation apply_reversals(SignedPermutation b, std::span<const Reversal> rs) {
  for (const Reversal& r : rs) b = apply_reversal(b, r);
  return b;
}

}  // namespace revgenus
