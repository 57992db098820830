#include <doctest.h>

#include "hurwitz/invariants.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/system_moves.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("orbit of a repeated generator is a single state") {
  const BraidSystem s = BraidSystem::parse(2, {"1", "1"});
  const OrbitResult r = hurwitz_orbit(s, OrbitLimits{});
  CHECK(r.status == OrbitStatus::kComplete);
  CHECK(r.states_visited == 1);
  CHECK(r.frontier_exhausted_at_depth == std::size_t{0});
}

TEST_CASE("orbit of (s1, s1^-1) in B_2") {
  const BraidSystem s = BraidSystem::parse(2, {"1", "-1"});
  OrbitLimits limits;
  limits.max_states = 50;
  const OrbitResult r = hurwitz_orbit(s, limits);
  CHECK(r.states_visited == 2);
  CHECK(r.status == OrbitStatus::kComplete);
}

TEST_CASE("orbit of (s1, s2) in B_3 closes") {
  const BraidSystem s = BraidSystem::parse(3, {"1", "2"});
  std::size_t count = 0;
  const OrbitResult r = hurwitz_orbit(s, OrbitLimits{}, std::nullopt, [&](const BraidSystem&, std::size_t) { ++count; });
  CHECK(r.status == OrbitStatus::kComplete);
  CHECK(r.states_visited == count);
  // B_2 is cyclic, so the orbit is the cycle of forward moves.
  std::size_t cycle = 1;
  for (BraidSystem x = hurwitz_move(s, {1, HurwitzMove::Direction::kForward}); !systems_equal(x, s);
       x = hurwitz_move(x, {1, HurwitzMove::Direction::kForward}))
    ++cycle;
  CHECK(r.states_visited == cycle);
}

TEST_CASE("target search returns a replayable witness") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    const BraidSystem s = testing::random_system(rng, 2, 4, 2, 3, 3);
    BraidSystem target = s;
    for (int k = 0; k < 3; ++k) {
      const HurwitzMove m{1 + static_cast<int>(rng() % (s.length() - 1)),
                          rng() % 2 ? HurwitzMove::Direction::kForward : HurwitzMove::Direction::kInverse};
      target = hurwitz_move(target, m);
    }
    const OrbitResult r = hurwitz_orbit(s, OrbitLimits{}, target);
    REQUIRE(r.status == OrbitStatus::kTargetFound);
    REQUIRE(r.witness);
    CHECK(r.witness->size() <= 3);
    CHECK(systems_equal(replay(s, *r.witness), target));
  }
}

TEST_CASE("orbit limits truncate") {
  const BraidSystem s = BraidSystem::parse(4, {"1,2,-3", "3", "-2", "-1"});
  OrbitLimits limits;
  limits.max_states = 200;
  const OrbitResult r = hurwitz_orbit(s, limits);
  CHECK(r.status == OrbitStatus::kTruncated);
  CHECK(r.states_visited == 200);
  CHECK_FALSE(r.frontier_exhausted_at_depth);

  limits.max_states = 100000;
  limits.max_depth = 2;
  const OrbitResult shallow = hurwitz_orbit(s, limits);
  CHECK(shallow.status == OrbitStatus::kTruncated);

  limits.max_depth = 32;
  limits.max_component_canonical_length = 1;
  CHECK(hurwitz_orbit(s, limits).status == OrbitStatus::kTruncated);
}

TEST_CASE("orbit is deterministic") {
  const BraidSystem s = BraidSystem::parse(3, {"1", "2", "-1"});
  OrbitLimits limits;
  limits.max_states = 300;
  std::vector<std::vector<NormalForm>> first, second;
  hurwitz_orbit(s, limits, std::nullopt, [&](const BraidSystem& x, std::size_t) { first.push_back(system_key(x)); });
  hurwitz_orbit(s, limits, std::nullopt, [&](const BraidSystem& x, std::size_t) { second.push_back(system_key(x)); });
  CHECK(first == second);
}

TEST_CASE("orbit states share the source invariants") {
  const BraidSystem s = BraidSystem::parse(4, {"1,-2,3", "-3", "2", "-1"});
  const SystemInvariantReport base = system_invariants(s);
  OrbitLimits limits;
  limits.max_states = 500;
  std::size_t bad = 0;
  hurwitz_orbit(s, limits, std::nullopt, [&](const BraidSystem& x, std::size_t) {
    const SystemInvariantReport r = system_invariants(x);
    if (r.charpoly_product != base.charpoly_product || r.charpoly_multiset != base.charpoly_multiset ||
        r.trace_normal_form != base.trace_normal_form || r.exponent_sums != base.exponent_sums ||
        r.perm_monodromy_order != base.perm_monodromy_order)
      ++bad;
  });
  CHECK(bad == 0);
}

TEST_CASE("orbit rejects mismatched targets") {
  const BraidSystem s = BraidSystem::parse(3, {"1", "2"});
  CHECK_THROWS(hurwitz_orbit(s, OrbitLimits{}, BraidSystem::parse(3, {"1", "2", "1"})));
}

TEST_CASE("conjugator search") {
  const BraidWord b = parse_word("3,-1,4", 5);
  const BraidWord c = parse_word("4,3,-1", 5);
  const auto a = find_conjugator(b, c, 3);
  REQUIRE(a);
  CHECK(braids_equal(conjugate(b, *a), c));
  CHECK(a->length() <= 3);
  CHECK_FALSE(find_conjugator(parse_word("1", 3), parse_word("-1", 3), 3));
  CHECK(find_conjugator(b, b, 0)->empty());
}
