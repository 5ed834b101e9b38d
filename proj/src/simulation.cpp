#include "roundsim/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace roundsim {

QuotientCapExceeded::QuotientCapExceeded(uint32_t k_, uint64_t count_, uint64_t cap_)
    : std::runtime_error("quotient alphabet at k=" + std::to_string(k_) + " has " +
                         std::to_string(count_) + " letters, cap is " + std::to_string(cap_)),
      k(k_),
      count(count_),
      cap(cap_) {}

ContainmentInstance ContainmentInstance::from(RedundantProduct rp) {
  ContainmentInstance inst;
  inst.b1 = std::make_shared<const Nfa>(std::move(rp.b1));
  inst.b2 = std::make_shared<const Nfa>(std::move(rp.b2));
  // One table serves both sides: the transition relations are identical.
  inst.table = std::make_shared<ParikhTypeTable>(inst.b1, rp.pa);
  return inst;
}

namespace {

// A quotient letter class: all Parikh pairs sharing the same pair of type
// matrices act identically on the containment product, so the search runs
// over classes and keeps one representative pair for counterexamples.
struct LetterClass {
  BitMatrix t1;
  BitMatrix t2;
  ParikhPair rep;
};

struct Config {
  State s1;
  std::vector<uint64_t> s2;  // subset of a2 states, packed
  int64_t parent;
  int32_t letter;
};

std::string config_key(State s1, const std::vector<uint64_t>& s2) {
  std::string key;
  key.reserve(4 + s2.size() * 8);
  for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((s1 >> (8 * b)) & 0xff));
  for (uint64_t w : s2) {
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  }
  return key;
}

bool subset_of(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace

SimulationVerdict quotient_containment(const PermClosureAutomaton& a1,
                                       const PermClosureAutomaton& a2,
                                       const ContainmentOptions& opts) {
  if (a1.k != a2.k) throw std::invalid_argument("containment: round length mismatch");
  if (!(a1.product_alphabet() == a2.product_alphabet())) {
    throw std::invalid_argument("containment: alphabet mismatch");
  }
  const uint32_t k = a1.k;
  const ProductAlphabet& pa = a1.product_alphabet();

  uint64_t n_pairs = count_parikh_pairs(pa.input.size(), pa.output.size(), k);
  if (n_pairs > opts.quotient_cap) throw QuotientCapExceeded(k, n_pairs, opts.quotient_cap);

  SimulationVerdict verdict;
  verdict.k = k;
  verdict.stats.quotient_letters = n_pairs;

  // Group quotient letters by their type-matrix pair, first occurrence order.
  std::vector<LetterClass> classes;
  {
    std::unordered_set<std::string> seen;
    const bool shared_table = a1.table == a2.table;
    for (ParikhPair& pp : enumerate_parikh_pairs(pa.input.size(), pa.output.size(), k)) {
      BitMatrix t1 = a1.table->type_of(pp.in, pp.out);
      BitMatrix t2 = shared_table ? t1 : a2.table->type_of(pp.in, pp.out);
      std::string key = t1.bytes() + t2.bytes();
      if (seen.insert(std::move(key)).second) {
        classes.push_back(LetterClass{std::move(t1), std::move(t2), std::move(pp)});
      }
    }
  }
  verdict.stats.distinct_letter_types = classes.size();

  const Nfa& n1 = *a1.base;
  const Nfa& n2 = *a2.base;
  const size_t wpr2 = (n2.num_states() + 63) / 64;

  auto is_bad = [&](State s1, const std::vector<uint64_t>& s2) {
    if (!n1.accepting[s1]) return false;
    for (State f = 0; f < n2.num_states(); ++f) {
      if (n2.accepting[f] && ((s2[f / 64] >> (f % 64)) & 1u)) return false;
    }
    return true;
  };

  std::vector<Config> nodes;
  std::unordered_set<std::string> visited;
  // Antichain frontier per a1-state: subsets already explored; a new subset
  // that contains one of them is dominated and can be skipped.
  std::vector<std::vector<std::vector<uint64_t>>> antichain(n1.num_states());

  bool any_accepting_seen = false;
  int64_t bad_node = -1;

  auto try_push = [&](State s1, std::vector<uint64_t> s2, int64_t parent, int32_t letter) {
    if (!visited.insert(config_key(s1, s2)).second) return;
    if (opts.antichain) {
      for (const auto& smaller : antichain[s1]) {
        if (subset_of(smaller, s2)) return;
      }
      antichain[s1].push_back(s2);
    }
    if (n1.accepting[s1]) any_accepting_seen = true;
    nodes.push_back(Config{s1, std::move(s2), parent, letter});
  };

  {
    std::vector<uint64_t> init2(wpr2, 0);
    init2[n2.initial / 64] |= uint64_t{1} << (n2.initial % 64);
    try_push(n1.initial, std::move(init2), -1, -1);
  }

  for (size_t head = 0; head < nodes.size() && bad_node < 0; ++head) {
    if (is_bad(nodes[head].s1, nodes[head].s2)) {
      bad_node = static_cast<int64_t>(head);
      break;
    }
    for (int32_t li = 0; li < static_cast<int32_t>(classes.size()); ++li) {
      const LetterClass& lc = classes[li];
      // Successor subset of a2 under this letter class.
      std::vector<uint64_t> s2_next(wpr2, 0);
      for (size_t w = 0; w < wpr2; ++w) {
        uint64_t word = nodes[head].s2[w];
        while (word) {
          size_t s = w * 64 + static_cast<size_t>(__builtin_ctzll(word));
          word &= word - 1;
          lc.t2.or_row_into(s, s2_next.data());
        }
      }
      // Nondeterministic successors of the a1 state.
      auto row = lc.t1.row(nodes[head].s1);
      for (size_t w = 0; w < row.size(); ++w) {
        uint64_t word = row[w];
        while (word) {
          State s1_next = static_cast<State>(w * 64 + static_cast<size_t>(__builtin_ctzll(word)));
          word &= word - 1;
          try_push(s1_next, s2_next, static_cast<int64_t>(head), li);
        }
      }
    }
  }

  verdict.stats.configs_explored = nodes.size();

  if (bad_node < 0) {
    verdict.holds = true;
    verdict.stats.vacuous = !any_accepting_seen;
    return verdict;
  }

  // Reconstruct the letter-class path and un-quotient it.
  std::vector<int32_t> path;
  for (int64_t at = bad_node; nodes[at].parent >= 0; at = nodes[at].parent) {
    path.push_back(nodes[at].letter);
  }
  std::reverse(path.begin(), path.end());
  // Sanity bound from the product-state count (counterexample length in
  // rounds can never exceed the number of distinct configurations).
  if (n2.num_states() < 50) {
    assert(path.size() <= n1.num_states() * (uint64_t{1} << n2.num_states()));
  }

  Word x, y;
  for (int32_t li : path) {
    Word xr = canonical_representative(classes[li].rep.in);
    Word yr = canonical_representative(classes[li].rep.out);
    x.insert(x.end(), xr.begin(), xr.end());
    y.insert(y.end(), yr.begin(), yr.end());
  }
  verdict.holds = false;
  verdict.counterexample = std::make_pair(std::move(x), std::move(y));
  return verdict;
}

SimulationVerdict fixed_round_simulates(const Transducer& t1, const Transducer& t2,
                                        const Nfa* lambda, uint32_t k,
                                        const ContainmentOptions& opts) {
  if (k == 0) throw std::invalid_argument("fixed_round_simulates: k must be positive");
  ContainmentInstance inst = ContainmentInstance::from(build_redundant_product(t1, t2, lambda));
  return quotient_containment(inst.a1(k), inst.a2(k), opts);
}

std::pair<SimulationVerdict, SimulationVerdict> fixed_round_equivalent(
    const Transducer& t1, const Transducer& t2, const Nfa* lambda, uint32_t k,
    const ContainmentOptions& opts) {
  return {fixed_round_simulates(t1, t2, lambda, k, opts),
          fixed_round_simulates(t2, t1, lambda, k, opts)};
}

}  // namespace roundsim
