// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "roundsim/existential.hpp"
#include "roundsim/generators.hpp"
#include "roundsim/io.hpp"
#include "roundsim/oracles.hpp"
#include "roundsim/rounds.hpp"
#include "roundsim/simulation.hpp"
#include "roundsim/symmetry.hpp"
#include "support.hpp"

using namespace roundsim;
namespace rt = roundsim::testing;

namespace {

int failures = 0;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < limit_seconds, "time limit exceeded");
  if (c.ok) {
    std::printf("criterion %d: PASS (%.3fs) %s\n", number, secs, title.c_str());
  } else {
    std::printf("criterion %d: FAIL (%.3fs) %s -- %s\n", number, secs, title.c_str(),
                c.detail.str().c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

int main() {
  // 1. Word-level round equivalence on the documented pair.
  criterion(1, "word-level round equivalence fixture", 0.001, [](Check& c) {
    Alphabet a({"a", "b"});
    Word x = a.parse_word({"a","b","a","a","b","b","a","b","b","b","a","a"});
    Word y = a.parse_word({"b","a","a","b","b","a","a","b","b","a","b","a"});
    c.expect(round_equivalent(x, y, 3, 2), "3-round equivalence expected");
    c.expect(!round_equivalent(x, y, 4, 2), "4-round inequivalence expected");
  });

  // 2. The worked five-state pair, end to end from fixture files.
  criterion(2, "worked pair end-to-end", 1.0, [](Check& c) {
    Transducer t1 = load_transducer_file(fixture("ab01_t1.txt"));
    Transducer t2 = load_transducer_file(fixture("ab01_t2.txt"));
    c.expect(fixed_round_simulates(t1, t2, nullptr, 2).holds, "forward should hold at k=2");
    SimulationVerdict bwd = fixed_round_simulates(t2, t1, nullptr, 2);
    c.expect(!bwd.holds, "backward should fail at k=2");
    if (bwd.counterexample) {
      Word ab = t1.input.parse_word({"a", "b"});
      c.expect(round_equivalent(bwd.counterexample->first, ab, 2, 2),
               "counterexample input should be 2-round equivalent to ab");
      c.expect(t1.output.format_word(bwd.counterexample->second) == "0 0",
               "counterexample output should be 00");
    } else {
      c.expect(false, "missing counterexample");
    }
    ExistentialVerdict ex = existential_search(t1, t2, nullptr, {});
    c.expect(ex.found && ex.k == 2, "existential search should find k=2");
  });

  // 3. Round robin, three processes.
  criterion(3, "round robin m=3", 30.0, [](Check& c) {
    Transducer t0 = gen_round_robin(3, 0);
    Transducer t1 = gen_round_robin(3, 1);
    Transducer t2 = gen_round_robin(3, 2);
    Word x = t0.input.parse_word({"{0}", "{2}", "{1}"});
    c.expect(t0.output.format_word(run_transducer(t0, x)) == "{0} {} {}",
             "t0 run output mismatch");
    c.expect(t1.output.format_word(run_transducer(t1, x)) == "{} {2} {}",
             "t1 run output mismatch");
    for (const Transducer* other : {&t1, &t2}) {
      auto [fwd, bwd] = fixed_round_equivalent(t0, *other, nullptr, 3);
      c.expect(fwd.holds && bwd.holds, "3-round equivalence of starts expected");
    }
  });

  // 4. Prime family, two primes: the exact set of working round lengths. The
  // simulation holds iff 2 | k and at most one of the spoke lengths 2, 3
  // misses k/2, since only one output block can straddle a round boundary;
  // minimal k is 4, and 12 = 2 * 2 * 3 is the first k with no cut block.
  criterion(4, "prime family m=2: holds exactly at k in {4,6,8,12} up to 12", 120.0,
            [](Check& c) {
    InstanceBundle b = gen_prime_family(2);
    const Nfa* lambda = &*b.lambda;
    for (uint32_t k = 1; k <= 12; ++k) {
      bool expected = k % 2 == 0 && (k / 2 % 2 == 0 || k / 2 % 3 == 0);
      c.expect(fixed_round_simulates(b.t1, b.t2, lambda, k).holds == expected,
               "wrong verdict at k=" + std::to_string(k));
    }
    ExistentialVerdict ex = existential_search(b.t1, b.t2, lambda, {});
    c.expect(ex.found && ex.k == 4, "existential search should find k=4");
    // Cross-check the surprising positives against the brute-force oracle.
    OracleBudget budget;
    budget.max_rounds = 3;
    budget.max_word_length = 12;
    budget.max_enumerations = 50000000;
    c.expect(oracle_fixed_simulation(b.t1, b.t2, lambda, 4, budget).status ==
                 OracleStatus::holds,
             "oracle disagrees at k=4");
  });

  // 5. Universality reduction faithfulness on random acceptors.
  criterion(5, "universality reduction faithfulness (20 random acceptors)", 300.0, [](Check& c) {
    std::mt19937 rng(2026);
    for (int done = 0; done < 20; ++done) {
      rt::RandomNfaOptions opts;
      opts.all_accepting = true;
      opts.max_degree = 2;
      opts.edge_prob = 0.55;
      Nfa n = rt::random_nfa(rng, opts);
      OracleResult uni = oracle_nfa_universality(n, 1u << 16);
      c.expect(!uni.exceeded(), "universality oracle budget");
      InstanceBundle b = gen_universality_reduction(n, false);
      auto [fwd, bwd] = fixed_round_equivalent(b.t1, b.t2, &*b.lambda, 2);
      c.expect((fwd.holds && bwd.holds) == (uni.status == OracleStatus::holds),
               "equivalence at k=2 must match universality (instance " + std::to_string(done) +
                   ")");
    }
  });

  // 6. Padded reduction: existential verdict matches universality.
  criterion(6, "padded reduction, existential up to k=8", 120.0, [](Check& c) {
    ExistentialOptions opts;
    opts.k_max = 8;

    Nfa universal = universal_nfa(Alphabet({"0", "1"}));
    InstanceBundle bu = gen_universality_reduction(universal, true);
    ExistentialEquivalenceVerdict vu =
        existential_equivalence(bu.t1, bu.t2, &*bu.lambda, opts);
    c.expect(vu.found, "universal source: equivalence should be found");

    // Two states, no transition on letter 1 from the second state.
    Nfa non = make_nfa(Alphabet({"0", "1"}), {"s", "t"}, 0, {0, 1});
    non.add_transition(0, 0, 1);
    non.add_transition(0, 1, 0);
    non.add_transition(1, 0, 0);
    OracleResult uni = oracle_nfa_universality(non, 100);
    c.expect(uni.status == OracleStatus::refuted, "source should be non-universal");
    InstanceBundle bn = gen_universality_reduction(non, true);
    ExistentialEquivalenceVerdict vn =
        existential_equivalence(bn.t1, bn.t2, &*bn.lambda, opts);
    c.expect(!vn.found, "non-universal source: no equivalence up to k=8");
  });

  // 7. Oracle agreement suites.
  criterion(7, "oracle agreement (100 instances, 500 membership pairs)", 600.0, [](Check& c) {
    std::mt19937 rng(2027);
    OracleBudget budget;  // two rounds
    int instances = 0;
    while (instances < 100) {
      Transducer a = rt::random_transducer(rng);
      Transducer b = rt::random_transducer(rng);
      uint32_t k = 1 + rng() % 3;
      OracleResult oracle = oracle_fixed_simulation(a, b, nullptr, k, budget);
      if (oracle.exceeded()) continue;
      SimulationVerdict v = fixed_round_simulates(a, b, nullptr, k);
      if (v.holds) {
        c.expect(oracle.status == OracleStatus::holds,
                 "checker holds but oracle refutes (instance " + std::to_string(instances) + ")");
      } else {
        if (oracle.status == OracleStatus::refuted) c.expect(!v.holds, "unreachable");
        if (v.counterexample && v.counterexample->first.size() <= budget.max_rounds * k) {
          c.expect(oracle.status == OracleStatus::refuted,
                   "short counterexample but oracle holds (instance " +
                       std::to_string(instances) + ")");
        }
      }
      ++instances;
    }

    int pairs = 0;
    while (pairs < 500) {
      Transducer t = rt::random_transducer(rng);
      ProductAlphabet pa = trace_alphabet(t);
      Nfa base = trace_dfa(t, pa);
      uint32_t k = 1 + rng() % 3;
      PermClosureAutomaton a = perm_closure(base, pa, k);
      size_t len = k * (rng() % 3);
      Word x = rt::random_word(rng, len, pa.input.size());
      Word y = rt::random_word(rng, len, pa.output.size());
      OracleResult r = oracle_perm_membership(base, pa, k, x, y, budget);
      if (r.exceeded()) continue;
      c.expect(perm_membership(a, pa.zip(x, y)) == (r.status == OracleStatus::holds),
               "membership disagreement (pair " + std::to_string(pairs) + ")");
      ++pairs;
    }
  });

  // 8. Invariant suites.
  criterion(8, "invariant suites", 600.0, [](Check& c) {
    std::mt19937 rng(2028);

    // Type morphism: word types multiply.
    for (int iter = 0; iter < 50; ++iter) {
      rt::RandomNfaOptions opts;
      opts.max_states = 6;
      Nfa n = rt::random_nfa(rng, opts);
      Word u = rt::random_word(rng, rng() % 8, n.alphabet.size());
      Word v = rt::random_word(rng, rng() % 8, n.alphabet.size());
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      c.expect(word_type(n, uv) == word_type(n, u) * word_type(n, v), "type morphism");
    }

    // Equivalence-relation laws for per-round comparison.
    for (int iter = 0; iter < 100; ++iter) {
      uint32_t k = 1 + rng() % 3;
      size_t len = k * (rng() % 4);
      Word x = rt::random_word(rng, len, 2);
      Word y = x, z = x;
      for (size_t r = 0; r * k < len; ++r) {
        std::shuffle(y.begin() + r * k, y.begin() + (r + 1) * k, rng);
        std::shuffle(z.begin() + r * k, z.begin() + (r + 1) * k, rng);
      }
      c.expect(round_equivalent(x, x, k, 2), "reflexivity");
      c.expect(round_equivalent(x, y, k, 2) && round_equivalent(y, x, k, 2), "symmetry");
      c.expect(round_equivalent(y, z, k, 2), "transitivity through the source word");
    }

    // Doubling the round length preserves positive simulations.
    int positives = 0;
    while (positives < 20) {
      Transducer a = rt::random_transducer(rng);
      Transducer b = rt::random_transducer(rng);
      uint32_t k = 1 + rng() % 2;
      if (!fixed_round_simulates(a, b, nullptr, k).holds) continue;
      c.expect(fixed_round_simulates(a, b, nullptr, 2 * k).holds,
               "holds at k but not 2k (positive " + std::to_string(positives) + ")");
      ++positives;
    }

    // Both product members share every letter type.
    for (int iter = 0; iter < 10; ++iter) {
      Transducer a = rt::random_transducer(rng);
      Transducer b = rt::random_transducer(rng);
      rt::RandomNfaOptions nopts;
      nopts.alphabet = a.input;
      Nfa lambda = rt::random_nfa(rng, nopts);
      RedundantProduct rp = build_redundant_product(a, b, &lambda);
      for (Symbol s = 0; s < rp.pa.combined.size(); ++s) {
        c.expect(letter_type(rp.b1, s) == letter_type(rp.b2, s), "shared letter types");
      }
    }

    // Renaming identity on 200 random (t, pi, x) triples.
    for (int iter = 0; iter < 200; ++iter) {
      uint32_t m = 2 + rng() % 2;
      Transducer t = gen_round_robin(m, rng() % m);
      std::vector<uint32_t> map(m);
      for (uint32_t i = 0; i < m; ++i) map[i] = i;
      std::shuffle(map.begin(), map.end(), rng);
      Permutation pi{map};
      Word x = rt::random_word(rng, rng() % 6, t.input.size());
      Word x_pre(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        Symbol mask = 0;
        for (uint32_t p = 0; p < m; ++p) {
          if (x[i] & (Symbol{1} << p)) mask |= Symbol{1} << pi.apply_inverse(p);
        }
        x_pre[i] = mask;
      }
      Word expect = run_transducer(t, x_pre);
      for (auto& s : expect) s = apply_permutation(pi, s);
      c.expect(run_transducer(permute_transducer(t, pi), x) == expect, "renaming identity");
    }

    // Reverse simulation wherever full symmetry holds.
    for (uint32_t m : {2u, 3u}) {
      Transducer t = gen_round_robin(m, 0);
      if (!is_round_symmetric(t, m).symmetric) {
        c.expect(false, "round robin should be symmetric at k=m");
        continue;
      }
      for (const Permutation& pi :
           {Permutation::transposition(m, 0, 1), Permutation::cycle(m)}) {
        Transducer tp = permute_transducer(t, pi);
        c.expect(fixed_round_simulates(t, tp, nullptr, m).holds,
                 "reverse simulation under symmetry");
      }
    }
  });

  // 9. Profile-memoization soundness: re-verify every reused answer.
  criterion(9, "profile reuse re-verification", 600.0, [](Check& c) {
    ExistentialOptions opts;
    opts.verify_reuse = true;  // recomputes every transfer; throws on mismatch

    InstanceBundle b = gen_prime_family(2);
    ExistentialVerdict v = existential_search(b.t1, b.t2, &*b.lambda, opts);
    c.expect(v.found && v.k == 4, "prime family verdict under verification");
    uint32_t reuses = v.reuse_count;

    Transducer t1 = load_transducer_file(fixture("ab01_t1.txt"));
    Transducer t2 = load_transducer_file(fixture("ab01_t2.txt"));
    ExistentialOptions small = opts;
    small.k_max = 12;
    ExistentialVerdict vb = existential_search(t2, t1, nullptr, small);
    c.expect(!vb.found, "backward worked pair stays refuted");
    reuses += vb.reuse_count;

    InstanceBundle bp = gen_universality_reduction(universal_nfa(Alphabet({"0", "1"})), true);
    ExistentialEquivalenceVerdict ve = existential_equivalence(bp.t1, bp.t2, &*bp.lambda, small);
    c.expect(ve.found, "padded universal instance found under verification");
    for (const auto& log : {ve.forward_log, ve.backward_log}) {
      for (const auto& e : log) {
        if (e.status == ProfileLogEntry::Status::reused) ++reuses;
      }
    }
    c.expect(reuses > 0, "no reuse happened anywhere; the check is vacuous");
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
