#include <doctest.h>

#include "hurwitz/braid.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("parse_word accepts commas and spaces") {
  CHECK(parse_word("1,1,-2", 3).tokens() == std::vector<int>{1, 1, -2});
  CHECK(parse_word(" 3 -1  4 ", 5).tokens() == std::vector<int>{3, -1, 4});
  CHECK(parse_word("", 4).empty());
  CHECK(parse_word("1,1,-2", 3).to_string() == "1,1,-2");
}

TEST_CASE("parse_word rejects bad tokens and names them") {
  CHECK_THROWS_AS(parse_word("1,0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1,3", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1,-3", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1,x", 3), ParseError);
  try {
    parse_word("2,7", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("braid permutation") {
  CHECK(permutation(parse_word("1,1,-2", 3)).one_based() == std::vector<int>{1, 3, 2});
  CHECK(permutation(parse_word("1,2,-3", 4)).one_based() == std::vector<int>{4, 1, 2, 3});
  CHECK(permutation(BraidWord(4)).is_identity());
  CHECK(permutation_order(parse_word("1,2,-3", 4)) == 4);
  CHECK(permutation_order(parse_word("3,-1,4", 5)) == 6);
  CHECK(permutation_order(BraidWord(3)) == 1);
}

TEST_CASE("permutation helpers") {
  const Permutation p = Permutation::from_one_based({2, 3, 1, 5, 4});
  CHECK(p.order() == 6);
  CHECK(p.cycle_count() == 2);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(Permutation::transposition(3, 0, 2).one_based() == std::vector<int>{3, 2, 1});
  CHECK_THROWS(Permutation(std::vector<int>{0, 0, 1}));
}

TEST_CASE("word algebra") {
  const BraidWord a = parse_word("1,-2", 3);
  const BraidWord b = parse_word("2,2", 3);
  CHECK(product(a, b).tokens() == std::vector<int>{1, -2, 2, 2});
  CHECK(inverse(a).tokens() == std::vector<int>{2, -1});
  CHECK(power(a, 2).tokens() == std::vector<int>{1, -2, 1, -2});
  CHECK(power(a, -1) == inverse(a));
  CHECK(power(a, 0).empty());
  CHECK(conjugate(b, a).tokens() == std::vector<int>{2, -1, 2, 2, 1, -2});
  CHECK(free_reduce(product(a, inverse(a))).empty());
  CHECK(exponent_sum(parse_word("1,1,-2,3", 4)) == 2);
  CHECK(iota(a).degree() == 4);
  CHECK_THROWS_AS(product(a, BraidWord(4)), DegreeMismatch);
}

TEST_CASE("normal form respects the braid relations") {
  CHECK(braids_equal(parse_word("1,2,1", 3), parse_word("2,1,2", 3)));
  CHECK(braids_equal(parse_word("1,3", 4), parse_word("3,1", 4)));
  CHECK(braids_equal(parse_word("-1,-2,-1", 3), parse_word("-2,-1,-2", 3)));
  CHECK(is_identity(parse_word("1,-1,2,-2", 3)));
  CHECK_FALSE(braids_equal(parse_word("1,2", 3), parse_word("2,1", 3)));
  CHECK_FALSE(braids_equal(parse_word("1", 3), parse_word("-1", 3)));
  CHECK_FALSE(is_identity(parse_word("1,1", 2)));
}

TEST_CASE("half twist and its square") {
  const BraidWord delta = parse_word("1,2,1", 3);
  const NormalForm nf = normal_form(delta);
  CHECK(nf.infimum == 1);
  CHECK(nf.factors.empty());
  CHECK(normal_form(inverse(delta)).infimum == -1);
  CHECK(normal_form(power(delta, 2)).infimum == 2);
  // The full twist is central.
  std::mt19937_64 rng(7);
  const BraidWord full = power(permutation_braid_word(Permutation::from_one_based({4, 3, 2, 1})), 2);
  for (int t = 0; t < 30; ++t) {
    const BraidWord w = testing::random_word(rng, 4, 10);
    CHECK(braids_equal(product(w, full), product(full, w)));
  }
}

TEST_CASE("normal form is stable under relation rewrites") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    BraidWord w = testing::random_word(rng, m, 12);
    const NormalForm nf = normal_form(w);
    for (int k = 0; k < 8; ++k) w = testing::random_relation_rewrite(rng, w);
    CHECK(normal_form(w) == nf);
    CHECK(normal_form(nf.to_word()) == nf);
    CHECK(permutation(nf.to_word()) == permutation(w));
    CHECK(exponent_sum(nf.to_word()) == exponent_sum(w));
  }
}

TEST_CASE("normal form of products and inverses") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 150; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const BraidWord a = testing::random_word(rng, m, 10);
    const BraidWord b = testing::random_word(rng, m, 10);
    CHECK(is_identity(product(a, inverse(a))));
    CHECK(is_identity(product(inverse(a), a)));
    CHECK(braids_equal(product(a, b), product(normal_form(a).to_word(), normal_form(b).to_word())));
    CHECK(hash_value(normal_form(product(a, b))) ==
          hash_value(normal_form(product(normal_form(a).to_word(), b))));
  }
}

TEST_CASE("permutation braid words") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 2 + rng() % 5;
    const Permutation p = testing::random_permutation(rng, m);
    const BraidWord w = permutation_braid_word(p);
    CHECK(permutation(w) == p);
    for (const Letter& l : w.letters()) CHECK(l.sign == 1);
    const NormalForm nf = normal_form(w);
    CHECK(nf.canonical_length() <= 1);
  }
}

TEST_CASE("degenerate degrees") {
  CHECK(normal_form(BraidWord(1)).factors.empty());
  CHECK(is_identity(BraidWord(1)));
  CHECK_THROWS(parse_word("1", 1));
}
