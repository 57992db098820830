#include <doctest.h>

#include "hurwitz/linalg.hpp"
#include "hurwitz/permgroup.hpp"
#include "hurwitz/polynomial.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("polynomial arithmetic and printing") {
  const IntPolynomial p{144, 108, -16, -21, 0, 1};
  CHECK(p.to_string() == "x^5 - 21x^3 - 16x^2 + 108x + 144");
  CHECK(p.degree() == 5);
  CHECK(p.is_monic());
  CHECK(p.evaluate(4) == 0);
  CHECK(p.evaluate(-2) == 0);
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{1}.to_string() == "1");
  CHECK(IntPolynomial{0, -1}.to_string() == "-x");
  const IntPolynomial q = IntPolynomial::linear(2) * IntPolynomial::linear(-3);
  CHECK(q == IntPolynomial{-6, 1, 1});
  CHECK(q - q == IntPolynomial{});
  CHECK(IntPolynomial::linear(1).pow(3) == IntPolynomial{-1, 3, -3, 1});
  CHECK(poly_equal(poly_mul(q, p), p * q));
  IntPolynomial quotient;
  CHECK(q.divide_by_root(2, quotient));
  CHECK(quotient == IntPolynomial::linear(-3));
  CHECK_FALSE(q.divide_by_root(5, quotient));
}

TEST_CASE("polynomial ordering is by degree then coefficients") {
  CHECK(IntPolynomial{5} < IntPolynomial{0, 1});
  CHECK(IntPolynomial{-1, 1} < IntPolynomial{0, 1});
  CHECK(IntPolynomial{0, 0, -1, 0, 1} < IntPolynomial{1, 0, -2, 0, 1});
}

TEST_CASE("integer roots") {
  const IntPolynomial p{144, 108, -16, -21, 0, 1};
  const auto roots = integer_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == RootMultiplicity{4, 1});
  CHECK(roots[1] == RootMultiplicity{3, 1});
  CHECK(roots[2] == RootMultiplicity{-2, 2});
  CHECK(roots[3] == RootMultiplicity{-3, 1});
  CHECK(integer_roots(IntPolynomial{0, 0, 0, 1}) == std::vector<RootMultiplicity>{{0, 3}});
  CHECK(integer_roots(IntPolynomial{2, 0, 1}).empty());
  const IntPolynomial big = IntPolynomial::linear(Integer("123456789012")) * IntPolynomial::linear(-7);
  CHECK(integer_roots(big).size() == 2);
}

TEST_CASE("reduce_poly and factored display") {
  const IntPolynomial p = IntPolynomial::monomial(6) * IntPolynomial::linear(-1).pow(3) *
                          IntPolynomial::linear(1).pow(6) * IntPolynomial::linear(-3);
  const ReducedPolynomial r = reduce_poly(p);
  CHECK(r.zero_mult == 6);
  CHECK(r.one_mult == 6);
  CHECK(r.neg_one_mult == 3);
  CHECK(r.core == IntPolynomial{3, 1});
  CHECK(r.expand() == p);
  CHECK(factored_string(p) == "x^6 (x+1)^3 (x-1)^6 (x+3)");
  CHECK(factored_string(IntPolynomial{1, 0, 1} * IntPolynomial::linear(0)) == "x (x^2 + 1)");
  CHECK(factored_string(IntPolynomial{7}) == "7");
  CHECK_THROWS(reduce_poly(IntPolynomial{}));
  CHECK(reduce_poly(IntPolynomial{1}).core == IntPolynomial{1});
}

TEST_CASE("charpoly matches cofactor expansion") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m(n);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    const IntPolynomial p = charpoly(m);
    CHECK(p == testing::cofactor_charpoly(m));
    CHECK(p.is_monic());
    CHECK(p.coefficient(n - 1) == -m.trace());
    const Integer sign = n % 2 == 0 ? 1 : -1;
    CHECK(p.coefficient(0) == sign * determinant(m));
  }
  CHECK(charpoly(IntMatrix(0)) == IntPolynomial{1});
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(determinant(IntMatrix(0)) == 1);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix(3)) == 0);
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix m = testing::random_symmetric(rng, n, -2, 2);
    if (t % 3 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 2;
    CHECK(rank(m) == testing::rational_rank(m));
    CHECK((determinant(m) == 0) == (rank(m) < n));
  }
}

TEST_CASE("large entries stay exact") {
  IntMatrix m(3);
  m(0, 1) = m(1, 0) = Integer("1000000000000");
  m(1, 2) = m(2, 1) = Integer("1000000000000");
  const IntPolynomial p = charpoly(m);
  CHECK(p.coefficient(1) == -Integer("2000000000000000000000000"));
  CHECK(p == testing::cofactor_charpoly(m));
}

TEST_CASE("permutation group order against closure") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + rng() % 6;
    std::vector<Permutation> gens;
    for (std::size_t k = rng() % 4; k > 0; --k) gens.push_back(testing::random_permutation(rng, m));
    const PermutationGroup g(m, gens);
    CHECK(g.order() == testing::closure_order(m, gens));
    for (const auto& p : gens) CHECK(g.contains(p));
  }
  const PermutationGroup s4(4, {Permutation::from_one_based({4, 1, 2, 3}), Permutation::from_one_based({2, 1, 3, 4})});
  CHECK(s4.order() == 24);
  const PermutationGroup c4(4, {Permutation::from_one_based({4, 1, 2, 3})});
  CHECK(c4.order() == 4);
  CHECK_FALSE(c4.contains(Permutation::from_one_based({2, 1, 3, 4})));
  const PermutationGroup s8(8, {Permutation::from_one_based({2, 3, 4, 5, 6, 7, 8, 1}),
                                Permutation::from_one_based({2, 1, 3, 4, 5, 6, 7, 8})});
  CHECK(s8.order() == 40320);
}
