#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "surflink/errors.hpp"
#include "surflink/group.hpp"

using namespace surflink;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

IntMatrix to_matrix(const std::vector<std::vector<long long>>& m) {
  IntMatrix out;
  for (const auto& row : m) {
    std::vector<Integer> r;
    for (long long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

// Every assignment, every relator evaluated through the table.
std::uint64_t brute_homs(const GroupPresentation& p, const FiniteGroupTable& T) {
  std::vector<int> f(static_cast<std::size_t>(p.rank), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const Word& r : p.relators) {
      int v = T.identity();
      for (Letter l : r.letters()) {
        const int g = f[generator_of(l) - 1];
        v = T.mul(v, l > 0 ? g : T.inv(g));
      }
      if (v != T.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < p.rank && ++f[i] == T.order()) f[i++] = 0;
    if (i == p.rank) break;
  }
  return count;
}

}  // namespace

TEST_CASE("closed braid link groups") {
  const GroupPresentation e = closed_braid_link_group(BraidWord(2));
  CHECK(e.rank == 2);
  REQUIRE(e.relators.size() == 2);
  CHECK(e.relators[0].empty());
  CHECK(e.relators[1].empty());
  CHECK(abelianization(e) == ints({0, 0}));

  const GroupPresentation s = closed_braid_link_group(BraidWord(2, {1}));
  CHECK(s.relators[0] == Word{1, 2, -1, -1});
  CHECK(s.relators[1] == Word{1, -2});
  CHECK(abelianization(s) == ints({0}));
  CHECK(abelianization(closed_braid_link_group(BraidWord(2, {1, 1, 1}))) == ints({0}));
  // Hopf link
  CHECK(abelianization(closed_braid_link_group(BraidWord(2, {1, 1}))) == ints({0, 0}));
}

TEST_CASE("conjugate braids give equal abelianizations") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> bl, gl;
    for (int i = 0; i < 6; ++i) bl.push_back((1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
    for (int i = 0; i < 4; ++i) gl.push_back((1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
    const BraidWord b(4, bl), g(4, gl);
    CHECK(abelianization(closed_braid_link_group(b)) ==
          abelianization(closed_braid_link_group(g * b * g.inverse())));
  }
}

TEST_CASE("plat knot groups") {
  const GroupPresentation sphere = plat_knot_group(BraidSystem(2));
  CHECK(sphere.rank == 2);
  REQUIRE(sphere.relators.size() == 1);
  CHECK(sphere.relators[0] == Word{1, 2});
  CHECK(abelianization(sphere) == ints({0}));

  BraidSystem p2(2);
  p2.add_factor(+1, BraidWord(2));
  const GroupPresentation g = plat_knot_group(p2);
  REQUIRE(g.relators.size() == 2);
  CHECK(g.relators[0] == Word{1, -2});
  CHECK(g.relators[1] == Word{1, 2});
  CHECK(abelianization(g) == ints({2}));
  CHECK(todd_coxeter(g, 1000).order == 2);
  CHECK(plat_knot_group(p2, false).relators.size() == 1);
}

TEST_CASE("Case-2 plat groups") {
  for (int k : {2, 4, 6}) {
    const GroupPresentation g = plat_knot_group(case2_system(k));
    CHECK(g.rank == 4);
    CHECK(g.relators.size() == 4);
    CHECK(abelianization(g) == ints({2, 2}));
    const CosetEnumeration tc = todd_coxeter(g, 100000);
    REQUIRE(tc.complete);
    CHECK(tc.order == 4 * k);
    // same number of maps into the quaternion table as Q itself has endomorphisms
    const FiniteGroupTable Q = generalized_quaternion(k / 2);
    CHECK(count_group_homs(g, Q) == count_group_homs(generalized_quaternion_presentation(k / 2), Q));
  }
  // odd k: the braid (s2^-1)^k swaps strands 2 and 3 and joins the two
  // plat pairs into one component
  for (int k : {1, 3, 5}) {
    CHECK(abelianization(plat_knot_group(case2_system(k))) == ints({0}));
  }
}

TEST_CASE("Smith normal form examples") {
  const SmithForm a = smith_normal_form(to_matrix({{2, 0}, {0, 0}}));
  CHECK(a.D == to_matrix({{2, 0}, {0, 0}}));
  CHECK(a.U == identity_matrix(2));
  CHECK(a.V == identity_matrix(2));
  CHECK(smith_normal_form(to_matrix({{1, 2}, {3, 4}})).D == to_matrix({{1, 0}, {0, 2}}));
  CHECK(smith_normal_form(to_matrix({{0, 0, 0}, {0, 0, 0}})).D == to_matrix({{0, 0, 0}, {0, 0, 0}}));
  CHECK(smith_normal_form(IntMatrix{}, 3).V == identity_matrix(3));
}

TEST_CASE("Smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
  for (int t = 0; t < 500; ++t) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(rows), std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& v : row) v = (rng() % 3 == 0) ? 0 : entry(rng);
    const IntMatrix M = to_matrix(m);
    const SmithForm s = smith_normal_form(M, static_cast<std::size_t>(cols));
    CHECK(matmul(matmul(s.U, M, rows, cols), s.V, cols, cols) == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const auto expected = oracle::invariant_factors(m, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (i == j) {
          CHECK(s.D[i][j] == expected[i]);
        } else {
          CHECK(s.D[i][j] == 0);
        }
      }
    }
  }
}

TEST_CASE("H1 classification") {
  CHECK(abelianization(GroupPresentation{1, {}}) == ints({0}));
  CHECK(classify_H1(ints({0})) == std::pair<int, int>{1, 0});
  CHECK(classify_H1(ints({2, 2})) == std::pair<int, int>{0, 2});
  CHECK_FALSE(classify_H1(ints({3})).has_value());
  CHECK_FALSE(classify_H1(ints({2, 4})).has_value());
  CHECK(render_H1(ints({2, 2})) == "(Z/2)^2");
  CHECK(render_H1({}) == "0");
  CHECK(render_H1(ints({2, 0, 0})) == "Z^2 + (Z/2)^1");
}

TEST_CASE("coset enumeration") {
  for (int n = 1; n <= 50; ++n) {
    GroupPresentation cyclic{1, {Word::generator(1).pow(n)}};
    CHECK(todd_coxeter(cyclic, 10000).order == n);
  }
  CHECK(todd_coxeter(parse_group_presentation("gens: 2\nrel: x1 x1 x1 x1\nrel: x2 x2 x1^-1 x1^-1\n"
                                              "rel: x2^-1 x1 x2 x1\n"),
                     10000)
            .order == 8);
  for (int k = 1; k <= 4; ++k) {
    CHECK(todd_coxeter(generalized_quaternion_presentation(k), 100000).order == 8 * k);
    CHECK(todd_coxeter(displayed_quaternion_presentation(k), 100000).order == 4 * k);
  }
  // Z is infinite: the limit is reached
  const CosetEnumeration z = todd_coxeter(GroupPresentation{1, {}}, 500);
  CHECK_FALSE(z.complete);
  CHECK(z.cosets_defined > 0);
  // S3
  CHECK(todd_coxeter(parse_group_presentation("gens: 2\nrel: x1 x1\nrel: x2 x2 x2\n"
                                              "rel: x1 x2 x1 x2\n"),
                     1000)
            .order == 6);
}

TEST_CASE("generalized quaternion tables") {
  const FiniteGroupTable q1 = generalized_quaternion(1);
  CHECK(q1.order() == 8);
  CHECK(q1.element_order(quaternion_element(1, 1, 0)) == 4);
  const FiniteGroupTable q2 = generalized_quaternion(2);
  CHECK(q2.order() == 16);
  int involutions = 0;
  for (int g = 0; g < q2.order(); ++g)
    if (q2.element_order(g) == 2) ++involutions;
  CHECK(involutions == 1);
  for (int k = 1; k <= 4; ++k) {
    const FiniteGroupTable q = generalized_quaternion(k);
    const int a = quaternion_element(k, 1, 0);
    const int b = quaternion_element(k, 0, 1);
    CHECK(q.element_order(b) == 4);
    CHECK(q.element_order(q.mul(q.inv(b), a)) == 4);
    CHECK(q.pow(b, 2) == q.pow(a, 2 * k));
  }
  CHECK_THROWS(FiniteGroupTable({{0, 1}, {0, 1}}, 0));
}

TEST_CASE("homomorphism counts") {
  const FiniteGroupTable q1 = generalized_quaternion(1);
  CHECK(count_group_homs(GroupPresentation{1, {}}, q1) == 8);
  CHECK(count_group_homs(parse_group_presentation("gens: 1\nrel: x1 x1\n"), q1) == 2);
  const GroupPresentation g = plat_knot_group(case2_system(2));
  CHECK(count_group_homs(g, q1) == brute_homs(g, q1));
  CHECK(count_group_homs(generalized_quaternion_presentation(1), q1) ==
        brute_homs(generalized_quaternion_presentation(1), q1));
  CHECK_THROWS_AS(count_group_homs(GroupPresentation{12, {}}, q1, 1000), GuardExceeded);
}

TEST_CASE("presentation text format") {
  const GroupPresentation p = parse_group_presentation("# Q8\ngens: 2\nrel: x1 x1 x1 x1\nrel: x2 x2 x1^-1 x1^-1\n");
  CHECK(p.rank == 2);
  CHECK(p.relators.size() == 2);
  const GroupPresentation back = parse_group_presentation(format_group_presentation(p));
  CHECK(back.rank == p.rank);
  CHECK(back.relators == p.relators);
  CHECK_THROWS_AS(parse_group_presentation("gens: 1\nrel: x2\n"), ParseError);
  CHECK_THROWS_AS(parse_group_presentation("rel: x1\n"), ParseError);
}

TEST_CASE("plat exponent sums without words") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const int degree = 2 * (1 + static_cast<int>(rng() % 3));
    const BraidSystem sys = random_braid_system(degree, 1 + static_cast<int>(rng() % 4), 6, rng());
    const GroupPresentation g = plat_knot_group(sys);
    CHECK(plat_exponent_sum_matrix(sys) == exponent_sum_matrix(g));
    CHECK(plat_exponent_sum_matrix(sys, false) == exponent_sum_matrix(plat_knot_group(sys, false)));
    CHECK(abelianization(plat_exponent_sum_matrix(sys), degree) == abelianization(g));
  }
}

TEST_CASE("abelianization is slide invariant") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const int degree = 2 * (1 + static_cast<int>(rng() % 3));
    const int n = 2 + static_cast<int>(rng() % 4);
    const BraidSystem sys = random_braid_system(degree, n, 4, rng());
    BraidSystem slid = sys;
    for (int m = 0; m < 5; ++m)
      slid = slide(slid, 1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? SlideDirection::right : SlideDirection::left);
    CHECK(abelianization(plat_knot_group(sys)) == abelianization(plat_knot_group(slid)));
  }
}
