#include <doctest.h>

#include "revgenus/error.hpp"
#include "revgenus/sigperm.hpp"
#include "support.hpp"

using namespace revgenus;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InternalInvariant;
}

}  // namespace

TEST_CASE("parse reads signed lists") {
  CHECK(parse("-5,+1,-3,+2,+4,+6") == SignedPermutation({-5, 1, -3, 2, 4, 6}));
  CHECK(parse("1 2 3") == SignedPermutation::identity(3));
  CHECK(parse("[ -2, -1 , 3 ]") == SignedPermutation({-2, -1, 3}));
  CHECK(parse("(1\t-2)") == SignedPermutation({1, -2}));
  CHECK(parse("").empty());
}

TEST_CASE("parse rejects bad input") {
  CHECK(code_of([] { parse("1,1"); }) == Errc::NotAPermutation);
  CHECK(code_of([] { parse("1,3"); }) == Errc::NotAPermutation);
  CHECK(code_of([] { parse("0,1"); }) == Errc::NotAPermutation);
  CHECK(code_of([] { parse("1,x"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse("1,--2"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse("+"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse("1,+-2"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse("1,2.0"); }) == Errc::MalformedToken);
}

TEST_CASE("to_string prints explicit signs") {
  CHECK(parse("-3,1,-2").to_string() == "[-3,+1,-2]");
  CHECK(SignedPermutation().to_string() == "[]");
  CHECK(to_string(Reversal{2, 3}) == "\xCF\x81(2,3)");
}

TEST_CASE("apply_reversal") {
  CHECK(apply_reversal(parse("-5,+1,-3,+2,+4,+6"), {3, 4}) == parse("-5,+1,-2,+3,+4,+6"));
  CHECK(apply_reversal(parse("-5,+1,-2,+3,+4,+6"), {3, 3}) == parse("-5,+1,+2,+3,+4,+6"));
  CHECK(apply_reversal(parse("1,2,3"), {1, 3}) == parse("-3,-2,-1"));
  CHECK(code_of([] { apply_reversal(parse("1,2"), {1, 3}); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { apply_reversal(parse("1,2"), {2, 1}); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { apply_reversal(parse("1,2"), {0, 1}); }) == Errc::IndexOutOfRange);
}

TEST_CASE("compose") {
  const auto b = parse("-5,+1,-3,+2,+4,+6");
  CHECK(compose(b, SignedPermutation::identity(6)) == b);
  CHECK(compose(SignedPermutation::identity(6), b) == b);
  CHECK(compose(b, SignedPermutation::reversal_element(6, {3, 4})) == parse("-5,+1,-2,+3,+4,+6"));
  CHECK(code_of([&] { compose(b, SignedPermutation::identity(5)); }) == Errc::LengthMismatch);
}

TEST_CASE("compose agrees with the sign-twisted product formula") {
  // [e_a, a] * [e_b, b] = [e_a * e_b^a, a*b] with (e_b^a)_i = (e_b)_{a(i)},
  // written out for permutations acting on positions from the right.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto a = support::random_perm(rng, n);
    const auto b = support::random_perm(rng, n);
    std::vector<int> expect(n);
    for (int k = 0; k < n; ++k) {
      const int bk = b.entries()[k];
      const int src = std::abs(bk);
      const int sign = (bk < 0 ? -1 : 1) * (a.at(src) < 0 ? -1 : 1);
      expect[k] = sign * std::abs(a.at(src));
    }
    CHECK(compose(a, b) == SignedPermutation(expect));
  }
}

TEST_CASE("reversals are involutions and match their group elements") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto b = support::random_perm(rng, n);
    const int i = 1 + static_cast<int>(rng() % n);
    const int j = i + static_cast<int>(rng() % (n - i + 1));
    const Reversal r{i, j};
    CHECK(apply_reversal(apply_reversal(b, r), r) == b);
    CHECK(compose(b, SignedPermutation::reversal_element(n, r)) == apply_reversal(b, r));
  }
}

TEST_CASE("compose is associative and inverse is two-sided") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto a = support::random_perm(rng, n);
    const auto b = support::random_perm(rng, n);
    const auto c = support::random_perm(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
  }
}

TEST_CASE("apply_reversals folds in order") {
  const auto b = parse("-5,+1,-3,+2,+4,+6");
  const std::vector<Reversal> rs{{3, 4}, {3, 3}};
  CHECK(apply_reversals(b, rs) == parse("-5,+1,+2,+3,+4,+6"));
}
