#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "surflink/braid.hpp"

using namespace surflink;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int degree, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, degree - 1), sgn(0, 1);
  std::vector<int> l(static_cast<std::size_t>(len(rng)));
  for (int& x : l) x = gen(rng) * (sgn(rng) ? 1 : -1);
  return BraidWord(degree, l);
}

}  // namespace

TEST_CASE("Artin action table") {
  CHECK(artin_action(BraidWord(2, {1}), Word{1}) == Word{1, 2, -1});
  CHECK(artin_action(BraidWord(2, {1}), Word{2}) == Word{1});
  CHECK(artin_action(BraidWord(2, {-1}), Word{1}) == Word{2});
  CHECK(artin_action(BraidWord(2, {-1}), Word{2}) == Word{-2, 1, 2});
  CHECK(artin_action(BraidWord(3, {1, -1}), Word{1, -3, 2}) == Word{1, -3, 2});
  CHECK_THROWS_AS(artin_action(BraidWord(2, {1}), Word{3}), std::invalid_argument);
}

TEST_CASE("braid words validate their letters") {
  CHECK_THROWS(BraidWord(3, {3}));
  CHECK_THROWS(BraidWord(3, {0}));
  CHECK(parse_braid("s2^-1 s1 s3^-1", 4).letters().size() == 3);
  CHECK(parse_braid("e", 4).empty());
  CHECK(BraidWord(4).str() == "e");
  CHECK(BraidWord(4, {2, -1}).str() == "s2 s1^-1");
  CHECK_THROWS(parse_braid("s4", 4));
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(BraidWord(3)).is_identity());
  CHECK(underlying_permutation(BraidWord(2, {1})) == Permutation({2, 1}));
  const Permutation p = underlying_permutation(BraidWord(3, {1, 2}));
  // left-to-right transposition composition: 1 -> 2 -> 3 -> 1 reading positions
  CHECK(p(1) == 2);
  CHECK(p(2) == 3);
  CHECK(p(3) == 1);
}

TEST_CASE("braid equality by the faithful action") {
  CHECK(braids_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(braids_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(braids_equal(BraidWord(2, {1}), BraidWord(2, {-1})));
  CHECK_THROWS(braids_equal(BraidWord(2), BraidWord(3)));
  // pure braid, nontrivial
  CHECK_FALSE(braids_equal(BraidWord(2, {1, 1}), BraidWord(2)));
}

TEST_CASE("Hilden generators") {
  CHECK(hilden_generators(1).size() == 1);
  const auto g2 = hilden_generators(2);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0].letters().size() == 1);
  CHECK(g2[1].str() == "s2 s1 s3 s2");
  CHECK(g2[2].str() == "s2 s1 s3^-1 s2^-1");
  CHECK(hilden_generators(3).size() == 4);
  for (int m = 1; m <= 5; ++m) {
    for (const auto& h : hilden_generators(m)) {
      CHECK(pairing_permutation_check(h).pass);
      CHECK(plat_kernel_check(h).pass);
      CHECK(adequacy_check(h).verdict == Verdict::not_rejected);
    }
  }
}

TEST_CASE("adequacy sub-checks") {
  CHECK(pairing_permutation_check(BraidWord(4, {1})).pass);
  const PairingCheck bad = pairing_permutation_check(BraidWord(4, {2}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.pair == 1);
  CHECK(bad.image == std::pair<int, int>{1, 3});
  CHECK(plat_kernel_check(BraidWord(4)).pass);
  CHECK(plat_kernel_check(BraidWord(4, {1})).pass);
  const KernelCheck kbad = plat_kernel_check(BraidWord(4, {2}));
  CHECK_FALSE(kbad.pass);
  CHECK(kbad.failing_pair == 1);
  CHECK(adequacy_check(BraidWord(4, {2})).verdict == Verdict::rejected);
  CHECK(to_string(Verdict::rejected) == "rejected");
  CHECK(to_string(Verdict::not_rejected) == "not-rejected");
  CHECK_THROWS(adequacy_check(BraidWord(3, {1})));
  CHECK_THROWS(plat_kernel_check(BraidWord(3)));
}

TEST_CASE("random Hilden elements") {
  CHECK(random_hilden_element(3, 0, 1).empty());
  CHECK(random_hilden_element(3, 20, 7) == random_hilden_element(3, 20, 7));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const BraidWord h = random_hilden_element(3, 20, seed);
    CHECK(adequacy_check(h).verdict == Verdict::not_rejected);
    // conjugating by a rejected braid breaks the pairing unless it cancels
    const BraidWord g(6, {2});
    const BraidWord c = g * h * g.inverse();
    if (!pairing_permutation_check(c).pass) {
      CHECK(adequacy_check(c).verdict == Verdict::rejected);
    }
  }
}

TEST_CASE("action respects the braid relations") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const int degree = 3 + static_cast<int>(rng() % 4);
    const Word w(oracle::random_letters(rng, degree, 10));
    const int i = 1 + static_cast<int>(rng() % (degree - 2));
    CHECK(artin_action(BraidWord(degree, {i, i + 1, i}), w) ==
          artin_action(BraidWord(degree, {i + 1, i, i + 1}), w));
    if (degree >= 4) {
      const int a = 1 + static_cast<int>(rng() % (degree - 1));
      const int b = 1 + static_cast<int>(rng() % (degree - 1));
      if (std::abs(a - b) >= 2) {
        CHECK(artin_action(BraidWord(degree, {a, b}), w) == artin_action(BraidWord(degree, {b, a}), w));
      }
    }
  }
}

TEST_CASE("action laws on random inputs") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const int degree = 2 + static_cast<int>(rng() % 5);
    const BraidWord b1 = random_braid(rng, degree, 8);
    const BraidWord b2 = random_braid(rng, degree, 8);
    const Word w(oracle::random_letters(rng, degree, 8));
    CHECK(artin_action(b1 * b2, w) == artin_action(b2, artin_action(b1, w)));
    CHECK(artin_action(b1.inverse(), artin_action(b1, w)) == w);
    CHECK(underlying_permutation(b1 * b2) ==
          underlying_permutation(b2).then(underlying_permutation(b1)));
    CHECK(braids_equal(b1 * b1.inverse(), BraidWord(degree)));
    CHECK(braids_equal(b1.free_reduced(), b1));
  }
}

TEST_CASE("conjugate labels follow the action") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; ++t) {
    const int degree = 2 + static_cast<int>(rng() % 5);
    std::vector<int> l;
    for (int i = 0; i < 8; ++i) l.push_back((1 + static_cast<int>(rng() % (degree - 1))) * (rng() % 2 ? 1 : -1));
    const BraidWord b(degree, l);
    const std::vector<int> lab = conjugate_labels(b);
    for (int j = 1; j <= degree; ++j) {
      std::vector<int> sums(static_cast<std::size_t>(degree + 1), 0);
      const Word image = artin_action(b, Word::generator(j));
      for (Letter x : image.letters()) sums[generator_of(x)] += sign_of(x);
      for (int g = 1; g <= degree; ++g) CHECK(sums[g] == (g == lab[j - 1] ? 1 : 0));
    }
  }
}
