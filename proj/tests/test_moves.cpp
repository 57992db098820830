#include <doctest.h>

#include "hurwitz/invariants.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/system_moves.hpp"
#include "support.hpp"

using namespace hurwitz;

namespace {

const HurwitzMove::Direction kFwd = HurwitzMove::Direction::kForward;
const HurwitzMove::Direction kInv = HurwitzMove::Direction::kInverse;

}  // namespace

TEST_CASE("Hurwitz move formulas") {
  const BraidSystem s = BraidSystem::parse(3, {"1", "2"});
  const BraidSystem f = hurwitz_move(s, {1, kFwd});
  CHECK(f[0].tokens() == std::vector<int>{2});
  CHECK(f[1].tokens() == std::vector<int>{-2, 1, 2});
  const BraidSystem g = hurwitz_move(s, {1, kInv});
  CHECK(g[0].tokens() == std::vector<int>{1, 2, -1});
  CHECK(g[1].tokens() == std::vector<int>{1});
  CHECK(systems_equal(hurwitz_move(f, {1, kInv}), s));
  CHECK_THROWS_AS(hurwitz_move(s, {2, kFwd}), MoveError);
  CHECK_THROWS_AS(hurwitz_move(s, {0, kFwd}), MoveError);
}

TEST_CASE("moves preserve the trace and are inverse to each other") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const BraidSystem s = testing::random_system(rng, 2, 5, 2, 4);
    const int i = 1 + static_cast<int>(rng() % (s.length() - 1));
    const BraidSystem f = hurwitz_move(s, {i, kFwd});
    CHECK(braids_equal(f.trace(), s.trace()));
    CHECK(systems_equal(hurwitz_move(f, {i, kInv}), s));
    CHECK(systems_equal(hurwitz_move(hurwitz_move(s, {i, kInv}), {i, kFwd}), s));
  }
}

TEST_CASE("shadows commute with moves") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    const BraidSystem s = testing::random_system(rng, 2, 5, 2, 4);
    const HurwitzMove move{1 + static_cast<int>(rng() % (s.length() - 1)), rng() % 2 ? kFwd : kInv};
    std::vector<Permutation> perms;
    std::vector<int> sums;
    for (const auto& c : s.components()) {
      perms.push_back(permutation(c));
      sums.push_back(exponent_sum(c));
    }
    const BraidSystem moved = hurwitz_move(s, move);
    std::vector<Permutation> moved_perms;
    std::vector<int> moved_sums;
    for (const auto& c : moved.components()) {
      moved_perms.push_back(permutation(c));
      moved_sums.push_back(exponent_sum(c));
    }
    CHECK(hurwitz_move(perms, move) == moved_perms);
    CHECK(hurwitz_move(sums, move) == moved_sums);
  }
}

TEST_CASE("exponent-sum shadow example") {
  CHECK(hurwitz_move(std::vector<int>{1, 1, -1, -1}, {2, kFwd}) == std::vector<int>{1, -1, 1, -1});
}

TEST_CASE("braid group action respects the braid relations") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const BraidSystem s = testing::random_system(rng, 2, 4, 3, 4, 4);
    const int n = static_cast<int>(s.length());
    const BraidWord beta = testing::random_word(rng, n, 5);
    const BraidWord same = testing::random_relation_rewrite(rng, beta);
    CHECK(systems_equal(hurwitz_act(s, beta), hurwitz_act(s, same)));
  }
  const BraidSystem s = BraidSystem::parse(3, {"1", "2", "-1"});
  CHECK(systems_equal(hurwitz_act(s, parse_word("1,2,1", 3)), hurwitz_act(s, parse_word("2,1,2", 3))));
  CHECK_THROWS_AS(hurwitz_act(s, parse_word("1", 4)), DegreeMismatch);
}

TEST_CASE("global conjugation and stabilization") {
  const BraidSystem s = BraidSystem::parse(3, {"1,2", "-1"});
  const BraidSystem c = global_conjugate(s, parse_word("2", 3));
  CHECK(c[0].tokens() == std::vector<int>{-2, 1, 2, 2});
  CHECK_THROWS_AS(global_conjugate(s, parse_word("1", 4)), DegreeMismatch);

  const BraidSystem up = stabilize(s);
  CHECK(up.degree() == 4);
  CHECK(up.length() == 4);
  CHECK(up[2].tokens() == std::vector<int>{3});
  CHECK(up[3].tokens() == std::vector<int>{-3});
  CHECK(systems_equal(destabilize(up), s));
  CHECK_THROWS_AS(destabilize(s), MoveError);
  CHECK_THROWS_AS(destabilize(BraidSystem::parse(4, {"3", "3", "-3"})), MoveError);
  CHECK_THROWS_AS(destabilize(BraidSystem::parse(4, {"1", "2", "-3"})), MoveError);
  // A component that only mentions the top generator in a cancelling pair is accepted.
  CHECK(destabilize(BraidSystem::parse(4, {"1,3,-3", "3", "-3"})).degree() == 3);
}

TEST_CASE("tau and fusion") {
  CHECK(tau(parse_word("1,-2,3", 4)) == 3);
  CHECK(tau(parse_word("-3", 4)) == 1);
  CHECK(tau(BraidWord(4)) == 0);
  const BraidSystem b = BraidSystem::parse(4, {"1,-2,3", "-3", "2", "-1"});
  const BraidSystem c = BraidSystem::parse(4, {"1,-2,3", "-3,2,-1"});
  const FusionResult once = euler_fuse(b, 3, 1);
  CHECK(once.tau_check);
  const FusionResult twice = euler_fuse(once.system, 2, 1);
  CHECK(twice.tau_check);
  CHECK(systems_equal(twice.system, c));
  const FusionResult direct = euler_fuse(b, 2, 2);
  CHECK(direct.tau_check);
  CHECK(systems_equal(direct.system, c));
  CHECK_FALSE(euler_fuse(BraidSystem::parse(3, {"1", "-1"}), 1, 1).tau_check);
  CHECK_THROWS_AS(euler_fuse(b, 4, 1), MoveError);
  CHECK_THROWS_AS(euler_fuse(b, 1, 0), MoveError);
}

TEST_CASE("fission check") {
  const BraidWord whole = parse_word("-3,2,-1", 4);
  CHECK(euler_fission_check(whole, {parse_word("-3", 4), parse_word("2", 4), parse_word("-1", 4)}));
  CHECK(euler_fission_check(whole, {parse_word("-3", 4), parse_word("2,-1", 4)}));
  CHECK_FALSE(euler_fission_check(whole, {whole}));
  CHECK_FALSE(euler_fission_check(whole, {parse_word("-3", 4), parse_word("2,-1,1", 4)}));
  CHECK_FALSE(euler_fission_check(whole, {parse_word("-3", 4), BraidWord(4), parse_word("2,-1", 4)}));
  CHECK_FALSE(euler_fission_check(parse_word("1,1", 3), {parse_word("1", 3), parse_word("1", 3)}));
}

TEST_CASE("Euler necessity") {
  const BraidSystem b = BraidSystem::parse(4, {"1,-2,3", "-3", "2", "-1"});
  const BraidSystem c = BraidSystem::parse(4, {"1,-2,3", "-3,2,-1"});
  CHECK(euler_necessity(b, c) == EulerVerdict::kNecessary);
  CHECK(euler_necessity(b, b) == EulerVerdict::kUnknown);
  CHECK(euler_necessity(b, stabilize(b)) == EulerVerdict::kUnknown);
  CHECK(to_string(EulerVerdict::kNecessary) == "necessary");
}

TEST_CASE("randomized invariance checker") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 15; ++t) {
    const BraidSystem s = testing::random_system(rng, 2, 5, 2, 4, 4);
    const InvarianceReport r = verify_invariance(s, 5, 1000 + static_cast<std::uint64_t>(t));
    CHECK(r.passed());
    CHECK(r.trials == 5);
  }
  const BraidSystem s = BraidSystem::parse(3, {"1", "2"});
  CHECK(verify_invariance(s, 3, 9).moves_applied == verify_invariance(s, 3, 9).moves_applied);
  CHECK_THROWS(verify_invariance(s, 0, 1));
}
