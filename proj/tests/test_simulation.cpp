#include <doctest.h>

#include <algorithm>
#include <random>

#include "roundsim/oracles.hpp"
#include "roundsim/rounds.hpp"
#include "roundsim/simulation.hpp"
#include "support.hpp"

using namespace roundsim;
namespace rt = roundsim::testing;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("worked pair: forward holds, backward refuted with the documented witness") {
  auto [t1, t2] = rt::worked_pair();

  SimulationVerdict fwd = fixed_round_simulates(t1, t2, nullptr, 2);
  CHECK(fwd.holds);

  SimulationVerdict bwd = fixed_round_simulates(t2, t1, nullptr, 2);
  CHECK(!bwd.holds);
  REQUIRE(bwd.counterexample.has_value());
  const auto& [cin, cout] = *bwd.counterexample;
  Word ab = t1.input.parse_word({"a", "b"});
  CHECK(round_equivalent(cin, ab, 2, t1.input.size()));
  CHECK(t1.output.format_word(cout) == "0 0");
}

TEST_CASE("every transducer simulates itself") {
  std::mt19937 rng(83);
  for (int iter = 0; iter < 20; ++iter) {
    Transducer t = rt::random_transducer(rng);
    for (uint32_t k : {1u, 2u, 3u}) {
      CHECK(fixed_round_simulates(t, t, nullptr, k).holds);
    }
  }
}

TEST_CASE("antichain pruning never changes the verdict") {
  std::mt19937 rng(89);
  ContainmentOptions with, without;
  without.antichain = false;
  for (int iter = 0; iter < 40; ++iter) {
    Transducer a = rt::random_transducer(rng);
    Transducer b = rt::random_transducer(rng);
    uint32_t k = 1 + rng() % 3;
    SimulationVerdict va = fixed_round_simulates(a, b, nullptr, k, with);
    SimulationVerdict vb = fixed_round_simulates(a, b, nullptr, k, without);
    CHECK(va.holds == vb.holds);
  }
}

namespace {

// All per-round recombinations of w (every round replaced by any distinct
// permutation of its letters).
std::vector<Word> all_recombinations(const Word& w, uint32_t k) {
  std::vector<std::vector<Word>> perms;
  for (Word r : rounds(w, k)) {
    std::sort(r.begin(), r.end());
    std::vector<Word> ps;
    do {
      ps.push_back(r);
    } while (std::next_permutation(r.begin(), r.end()));
    perms.push_back(std::move(ps));
  }
  std::vector<Word> out;
  std::vector<size_t> idx(perms.size(), 0);
  while (true) {
    Word xp;
    for (size_t r = 0; r < perms.size(); ++r) {
      xp.insert(xp.end(), perms[r][idx[r]].begin(), perms[r][idx[r]].end());
    }
    out.push_back(std::move(xp));
    size_t r = 0;
    for (; r < perms.size(); ++r) {
      if (++idx[r] < perms[r].size()) break;
      idx[r] = 0;
    }
    if (r == perms.size()) return out;
  }
}

}  // namespace

TEST_CASE("counterexamples are genuine: the definition fails on the witness class") {
  std::mt19937 rng(97);
  int refuted = 0;
  for (int iter = 0; iter < 80 && refuted < 12; ++iter) {
    Transducer a = rt::random_transducer(rng);
    Transducer b = rt::random_transducer(rng);
    uint32_t k = 1 + rng() % 2;
    SimulationVerdict v = fixed_round_simulates(a, b, nullptr, k);
    if (v.holds) continue;
    REQUIRE(v.counterexample.has_value());
    const auto& [cin, cout] = *v.counterexample;
    REQUIRE(cin.size() % k == 0);
    if (cin.size() > 8) continue;  // keep the enumeration cheap
    // The witness is some x' with x' related to cin and a(x') related to cout;
    // such an x' must exist, and no recombination may make b's output match.
    bool witness_exists = false;
    for (const Word& xp : all_recombinations(cin, k)) {
      if (round_equivalent(run_transducer(a, xp), cout, k, a.output.size())) {
        witness_exists = true;
      }
      CHECK(!round_equivalent(run_transducer(b, xp), cout, k, b.output.size()));
    }
    CHECK(witness_exists);
    ++refuted;
  }
  CHECK(refuted >= 5);
}

TEST_CASE("oracle agreement on the bounded fragment") {
  std::mt19937 rng(101);
  OracleBudget budget;  // 2 rounds
  int agreements = 0;
  for (int iter = 0; iter < 50; ++iter) {
    Transducer a = rt::random_transducer(rng);
    Transducer b = rt::random_transducer(rng);
    uint32_t k = 1 + rng() % 3;
    OracleResult oracle = oracle_fixed_simulation(a, b, nullptr, k, budget);
    if (oracle.exceeded()) continue;
    SimulationVerdict v = fixed_round_simulates(a, b, nullptr, k);
    // The checker covers all round counts, the oracle only up to the budget:
    // checker-holds implies oracle-holds; an oracle refutation is final.
    if (v.holds) CHECK(oracle.status == OracleStatus::holds);
    if (oracle.status == OracleStatus::refuted) CHECK(!v.holds);
    // And when the checker's counterexample fits the budget, both refute.
    if (!v.holds && v.counterexample &&
        v.counterexample->first.size() <= budget.max_rounds * k) {
      CHECK(oracle.status == OracleStatus::refuted);
    }
    ++agreements;
  }
  CHECK(agreements >= 40);
}

TEST_CASE("restriction to an empty language holds vacuously") {
  auto [t1, t2] = rt::worked_pair();
  Nfa empty = make_nfa(t1.input, {"s"}, 0, {});  // accepts nothing
  SimulationVerdict v = fixed_round_simulates(t2, t1, nullptr, 2);
  REQUIRE(!v.holds);  // sanity: without the restriction this direction fails
  SimulationVerdict vr = fixed_round_simulates(t2, t1, &empty, 2);
  CHECK(vr.holds);
  CHECK(vr.stats.vacuous);
}

TEST_CASE("quotient cap aborts oversized round lengths with a typed error") {
  auto [t1, t2] = rt::worked_pair();
  ContainmentOptions opts;
  opts.quotient_cap = 3;
  CHECK_THROWS_AS(fixed_round_simulates(t1, t2, nullptr, 4, opts), QuotientCapExceeded);
  try {
    fixed_round_simulates(t1, t2, nullptr, 4, opts);
  } catch (const QuotientCapExceeded& e) {
    CHECK(e.k == 4);
    CHECK(e.cap == 3);
    CHECK(e.count == 25);  // C(5,1)^2 compositions of 4 into two parts
  }
}

TEST_CASE("equivalence requires both directions") {
  auto [t1, t2] = rt::worked_pair();
  auto [fwd, bwd] = fixed_round_equivalent(t1, t2, nullptr, 2);
  CHECK(fwd.holds);
  CHECK(!bwd.holds);
  auto [ff, bb] = fixed_round_equivalent(t1, t1, nullptr, 2);
  CHECK(ff.holds);
  CHECK(bb.holds);
}

TEST_CASE("k must be positive") {
  auto [t1, t2] = rt::worked_pair();
  CHECK_THROWS_AS(fixed_round_simulates(t1, t2, nullptr, 0), std::invalid_argument);
}

TEST_SUITE_END();
