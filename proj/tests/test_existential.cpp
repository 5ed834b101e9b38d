#include <doctest.h>

#include <random>

#include "roundsim/existential.hpp"
#include "roundsim/generators.hpp"
#include "support.hpp"

using namespace roundsim;
namespace rt = roundsim::testing;

TEST_SUITE_BEGIN("existential");

TEST_CASE("worked pair: minimal k is 2") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialVerdict v = existential_search(t1, t2, nullptr, {});
  CHECK(v.found);
  CHECK(v.k == 2);
  REQUIRE(v.log.size() == 2);
  CHECK(v.log[0].k == 1);
  CHECK(!v.log[0].holds);
  CHECK(v.log[1].k == 2);
  CHECK(v.log[1].holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->holds);
}

TEST_CASE("self-simulation is found at k = 1") {
  std::mt19937 rng(103);
  for (int iter = 0; iter < 10; ++iter) {
    Transducer t = rt::random_transducer(rng);
    ExistentialVerdict v = existential_search(t, t, nullptr, {});
    CHECK(v.found);
    CHECK(v.k == 1);
  }
}

TEST_CASE("bounded negative reports the whole sweep") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  opts.k_max = 5;
  // Backward direction never holds: t1 cannot mimic t2's asymmetric outputs.
  ExistentialVerdict v = existential_search(t2, t1, nullptr, opts);
  CHECK(!v.found);
  CHECK(v.k_max == 5);
  CHECK(v.log.size() == 5);
  for (const auto& e : v.log) CHECK(!e.holds);
}

TEST_CASE("profile reuse fires and verified recomputation agrees") {
  // The backward worked pair never holds, so the sweep visits every k; its
  // letter types cycle through a small set of profiles, and repetitions must
  // reuse the earlier answers.
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  opts.k_max = 12;
  opts.verify_reuse = true;  // throws std::logic_error on any transfer mismatch
  ExistentialVerdict v = existential_search(t2, t1, nullptr, opts);
  CHECK(!v.found);
  CHECK(v.reuse_count > 0);
  uint32_t reused_seen = 0;
  for (const auto& e : v.log) {
    if (e.status == ProfileLogEntry::Status::reused) {
      ++reused_seen;
      CHECK(e.reused_from < e.k);
      // The transfer source carries the same fingerprint.
      for (const auto& src : v.log) {
        if (src.k == e.reused_from) CHECK(src.fingerprint == e.fingerprint);
      }
    }
  }
  CHECK(reused_seen == v.reuse_count);
}

TEST_CASE("tiny quotient cap yields skipped entries, not silent answers") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  opts.k_max = 4;
  opts.quotient_cap = 5;  // k=2 already needs 9 Parikh pairs
  ExistentialVerdict v = existential_search(t1, t2, nullptr, opts);
  CHECK(!v.found);
  REQUIRE(v.log.size() == 4);
  CHECK(v.log[0].status == ProfileLogEntry::Status::computed);
  for (size_t i = 1; i < v.log.size(); ++i) {
    CHECK(v.log[i].status == ProfileLogEntry::Status::skipped);
  }
}

TEST_CASE("equivalence search needs both directions at the same k") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  opts.k_max = 6;
  ExistentialEquivalenceVerdict v = existential_equivalence(t1, t2, nullptr, opts);
  CHECK(!v.found);  // backward direction never holds
  ExistentialEquivalenceVerdict self = existential_equivalence(t1, t1, nullptr, opts);
  CHECK(self.found);
  CHECK(self.k == 1);
}

TEST_CASE("progress callback sees every log entry in order") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  std::vector<uint32_t> ks;
  opts.progress = [&](const ProfileLogEntry& e) { ks.push_back(e.k); };
  existential_search(t1, t2, nullptr, opts);
  CHECK(ks == std::vector<uint32_t>{1, 2});
}

TEST_CASE("fingerprints are stable across tables for equal profiles") {
  auto [t1, t2] = rt::worked_pair();
  ExistentialOptions opts;
  opts.k_max = 3;
  ExistentialVerdict a = existential_search(t1, t2, nullptr, opts);
  ExistentialVerdict b = existential_search(t1, t2, nullptr, opts);
  REQUIRE(a.log.size() <= b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].fingerprint == b.log[i].fingerprint);
    CHECK(a.log[i].holds == b.log[i].holds);
  }
}

TEST_SUITE_END();
