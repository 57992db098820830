#include "hurwitz/orbit.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

#include "hurwitz/invariants.hpp"

namespace hurwitz {

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::kComplete: return "complete";
    case OrbitStatus::kTruncated: return "truncated";
    case OrbitStatus::kTargetFound: return "target_found";
  }
  return "unknown";
}

namespace {

using Key = std::vector<NormalForm>;

struct KeyHash {
  std::size_t operator()(const Key& key) const {
    std::size_t h = key.size();
    for (const auto& nf : key) h ^= hash_value(nf) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Node {
  BraidSystem system;
  std::size_t parent;
  HurwitzMove move;
  std::size_t depth;
};

std::vector<HurwitzMove> moves_for(std::size_t length) {
  std::vector<HurwitzMove> out;
  for (int i = 1; i < static_cast<int>(length); ++i) {
    out.push_back({i, HurwitzMove::Direction::kForward});
    out.push_back({i, HurwitzMove::Direction::kInverse});
  }
  return out;
}

std::vector<HurwitzMove> path_to(const std::vector<Node>& nodes, std::size_t index) {
  std::vector<HurwitzMove> path;
  while (index != 0) {
    path.push_back(nodes[index].move);
    index = nodes[index].parent;
  }
  return {path.rbegin(), path.rend()};
}

}  // namespace

std::vector<NormalForm> system_key(const BraidSystem& s) { return s.normal_forms(); }

BraidSystem canonical_system(const BraidSystem& s) {
  std::vector<BraidWord> c;
  c.reserve(s.length());
  for (const auto& b : s.components()) c.push_back(free_reduce(normal_form(b).to_word()));
  return BraidSystem(s.degree(), std::move(c));
}

OrbitResult hurwitz_orbit(const BraidSystem& source, const OrbitLimits& limits,
                          const std::optional<BraidSystem>& target, const OrbitVisitor& visitor) {
  if (target && (target->degree() != source.degree() || target->length() != source.length()))
    throw std::invalid_argument("orbit target must have the same degree and length as the source");

  OrbitResult result;
  const std::optional<Key> target_key = target ? std::optional<Key>(system_key(*target)) : std::nullopt;

  std::vector<Node> nodes;
  std::unordered_map<Key, std::size_t, KeyHash> seen;
  Key source_key = system_key(source);
  nodes.push_back({canonical_system(source), 0, {}, 0});
  seen.emplace(source_key, 0);
  if (visitor) visitor(nodes[0].system, 0);
  result.states_visited = 1;
  if (target_key && *target_key == source_key) {
    result.status = OrbitStatus::kTargetFound;
    result.witness = std::vector<HurwitzMove>{};
    return result;
  }

  const auto moves = moves_for(source.length());
  bool truncated = false;
  std::size_t deepest = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    const std::size_t depth = nodes[current].depth;
    for (const HurwitzMove& move : moves) {
      BraidSystem next = hurwitz_move(nodes[current].system, move);
      Key key = system_key(next);
      if (seen.count(key)) continue;
      if (depth >= limits.max_depth || nodes.size() >= limits.max_states) {
        truncated = true;
        continue;
      }
      bool too_long = false;
      for (const auto& nf : key) too_long = too_long || nf.canonical_length() > limits.max_component_canonical_length;
      if (too_long) {
        truncated = true;
        continue;
      }
      std::vector<BraidWord> words;
      for (const auto& nf : key) words.push_back(free_reduce(nf.to_word()));
      nodes.push_back({BraidSystem(source.degree(), std::move(words)), current, move, depth + 1});
      const std::size_t index = nodes.size() - 1;
      deepest = std::max(deepest, depth + 1);
      if (visitor) visitor(nodes[index].system, depth + 1);
      result.states_visited = nodes.size();
      if (target_key && key == *target_key) {
        result.status = OrbitStatus::kTargetFound;
        result.witness = path_to(nodes, index);
        return result;
      }
      seen.emplace(std::move(key), index);
      queue.push_back(index);
    }
  }

  result.status = truncated ? OrbitStatus::kTruncated : OrbitStatus::kComplete;
  if (!truncated) result.frontier_exhausted_at_depth = deepest;
  return result;
}

BraidSystem replay(const BraidSystem& source, const std::vector<HurwitzMove>& moves) {
  BraidSystem s = source;
  for (const auto& m : moves) s = hurwitz_move(s, m);
  return s;
}

std::optional<BraidWord> find_conjugator(const BraidWord& b, const BraidWord& target, std::size_t max_length,
                                         std::size_t max_states) {
  if (b.degree() != target.degree()) throw DegreeMismatch("conjugacy search needs braids of equal degree");
  const NormalForm goal = normal_form(target);
  const int m = b.degree();

  std::unordered_map<NormalForm, bool, NormalFormHash> seen;
  std::deque<std::pair<BraidWord, std::size_t>> queue;
  queue.emplace_back(BraidWord(m), 0);
  seen.emplace(normal_form(BraidWord(m)), true);
  while (!queue.empty()) {
    auto [a, depth] = queue.front();
    queue.pop_front();
    if (normal_form(conjugate(b, a)) == goal) return a;
    if (depth == max_length) continue;
    for (int i = 1; i < m; ++i) {
      for (int sign : {1, -1}) {
        if (seen.size() >= max_states) return std::nullopt;
        BraidWord next = free_reduce(product(a, BraidWord::generator(m, i, sign)));
        if (!seen.emplace(normal_form(next), true).second) continue;
        queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Snapshot {
  IntPolynomial product;
  std::vector<IntPolynomial> multiset;
  IntPolynomial core;
  std::vector<int> exponent_sums;
};

Snapshot snapshot(const BraidSystem& s) {
  Snapshot out;
  out.product = IntPolynomial::constant(1);
  for (const auto& c : s.components()) {
    IntPolynomial p = braid_charpoly(c);
    out.product = out.product * p;
    out.multiset.push_back(std::move(p));
    out.exponent_sums.push_back(exponent_sum(c));
  }
  std::sort(out.multiset.begin(), out.multiset.end());
  std::sort(out.exponent_sums.begin(), out.exponent_sums.end());
  out.core = reduce_poly(out.product).core;
  return out;
}

BraidWord random_word(std::mt19937_64& rng, int degree, std::size_t max_length) {
  if (degree < 2) return BraidWord(degree);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, degree - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  for (std::size_t k = len(rng); k > 0; --k) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return BraidWord(degree, std::move(letters));
}

}  // namespace

InvarianceReport verify_invariance(const BraidSystem& s, std::size_t trials, std::uint64_t seed,
                                   std::size_t max_sequence_length) {
  if (trials < 1) throw std::invalid_argument("verify_invariance needs at least one trial");
  InvarianceReport report;
  std::mt19937_64 rng(seed);
  const Snapshot base = snapshot(s);
  const int mod3 = static_cast<int>((static_cast<std::size_t>(s.degree()) + s.length()) % 3);

  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    BraidSystem current = canonical_system(s);
    BraidWord expected_trace = s.trace();
    std::ostringstream history;
    std::uniform_int_distribution<std::size_t> seq_len(1, max_sequence_length);
    const std::size_t steps = seq_len(rng);

    auto fail = [&](const std::string& what) {
      report.failures.push_back("trial " + std::to_string(t) + " after [" + history.str() + "]: " + what);
    };

    for (std::size_t step = 0; step < steps; ++step) {
      std::uniform_int_distribution<int> kind_dist(0, 9);
      int kind = kind_dist(rng);
      if (current.length() < 2 && kind < 7) kind = 7;

      if (kind < 7) {
        std::uniform_int_distribution<int> idx(1, static_cast<int>(current.length()) - 1);
        HurwitzMove move{idx(rng), kind % 2 == 0 ? HurwitzMove::Direction::kForward
                                                 : HurwitzMove::Direction::kInverse};
        current = hurwitz_move(current, move);
        history << "H " << move.index << (move.direction == HurwitzMove::Direction::kForward ? " +" : " -")
                << "; ";
      } else if (kind < 9) {
        BraidWord a = random_word(rng, current.degree(), 4);
        current = global_conjugate(current, a);
        expected_trace = conjugate(expected_trace, a);
        history << "GC " << a.to_string() << "; ";
      } else {
        history << "STAB; DESTAB; ";
        const BraidSystem up = stabilize(current);
        if ((static_cast<std::size_t>(up.degree()) + up.length()) % 3 != static_cast<std::size_t>(mod3))
          fail("stabilization changed (m + n) mod 3");
        if (snapshot(up).core != base.core) fail("stabilization changed the essential core");
        if (!systems_equal(destabilize(up), current)) fail("destabilize(stabilize(s)) differs from s");
      }
      ++report.moves_applied;

      // Keep words short; the braids are unchanged.
      current = canonical_system(current);

      const Snapshot now = snapshot(current);
      if (now.product != base.product) fail("characteristic polynomial product changed");
      if (now.multiset != base.multiset) fail("multiset of characteristic polynomials changed");
      if (now.core != base.core) fail("essential core changed");
      if (now.exponent_sums != base.exponent_sums) fail("exponent-sum multiset changed");
      if (!braids_equal(current.trace(), expected_trace)) fail("trace product is not the tracked trace");
      if (!report.failures.empty() && report.failures.size() > 20) return report;
    }
  }
  return report;
}

}  // namespace hurwitz
