#include <doctest.h>

#include <random>
#include <stdexcept>

#include "roundsim/nfa.hpp"
#include "roundsim/transducer.hpp"
#include "support.hpp"

using namespace roundsim;
namespace rt = roundsim::testing;

TEST_SUITE_BEGIN("core");

TEST_CASE("alphabet indexing and word round-trips") {
  Alphabet a({"a", "b", "c"});
  CHECK(a.size() == 3);
  CHECK(a.index_of("b") == 1);
  CHECK(a.name(2) == "c");
  CHECK(a.contains("a"));
  CHECK(!a.contains("z"));
  CHECK_THROWS_AS(a.index_of("z"), std::invalid_argument);

  Word w = a.parse_word({"c", "a", "b"});
  CHECK(w == Word{2, 0, 1});
  CHECK(a.format_word(w) == "c a b");
}

TEST_CASE("product alphabet pairing is a bijection and zip/unzip invert") {
  ProductAlphabet pa = ProductAlphabet::make(Alphabet({"a", "b"}), Alphabet({"0", "1", "2"}));
  CHECK(pa.combined.size() == 6);
  for (Symbol i = 0; i < 2; ++i) {
    for (Symbol o = 0; o < 3; ++o) {
      Symbol p = pa.pair(i, o);
      CHECK(pa.in_of(p) == i);
      CHECK(pa.out_of(p) == o);
    }
  }
  CHECK(pa.combined.name(pa.pair(1, 2)) == "b/2");
  Word x{0, 1, 1}, y{2, 0, 1};
  auto [x2, y2] = pa.unzip(pa.zip(x, y));
  CHECK(x2 == x);
  CHECK(y2 == y);
}

TEST_CASE("bitmatrix product matches naive boolean product") {
  std::mt19937 rng(7);
  std::bernoulli_distribution bit(0.3);
  for (int iter = 0; iter < 50; ++iter) {
    size_t n = 1 + rng() % 70;  // crosses the 64-bit word boundary
    BitMatrix a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (bit(rng)) a.set(i, j);
        if (bit(rng)) b.set(i, j);
      }
    }
    BitMatrix c = a * b;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        bool expect = false;
        for (size_t k = 0; k < n && !expect; ++k) expect = a.get(i, k) && b.get(k, j);
        CHECK(c.get(i, j) == expect);
      }
    }
    CHECK(a * BitMatrix::identity(n) == a);
    CHECK(BitMatrix::identity(n) * a == a);
  }
}

TEST_CASE("bitmatrix ordering and serialization are consistent with equality") {
  BitMatrix a(3), b(3);
  a.set(0, 1);
  b.set(0, 1);
  CHECK(a == b);
  CHECK(a.bytes() == b.bytes());
  CHECK(a.fnv1a() == b.fnv1a());
  b.set(2, 2);
  CHECK(a != b);
  CHECK(a.bytes() != b.bytes());
  CHECK((a < b || b < a));
}

TEST_CASE("word_type is a monoid morphism") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    rt::RandomNfaOptions opts;
    opts.max_states = 6;
    Nfa n = rt::random_nfa(rng, opts);
    Word u = rt::random_word(rng, rng() % 5, n.alphabet.size());
    Word v = rt::random_word(rng, rng() % 5, n.alphabet.size());
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(word_type(n, uv) == word_type(n, u) * word_type(n, v));
  }
}

TEST_CASE("nfa membership agrees with the type matrix") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    Nfa n = rt::random_nfa(rng);
    Word w = rt::random_word(rng, rng() % 7, n.alphabet.size());
    BitMatrix m = word_type(n, w);
    bool expect = false;
    for (State f = 0; f < n.num_states(); ++f) {
      if (n.accepting[f] && m.get(n.initial, f)) expect = true;
    }
    CHECK(nfa_membership(n, w) == expect);
  }
}

TEST_CASE("universal acceptor accepts everything") {
  Nfa u = universal_nfa(Alphabet({"a", "b"}));
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    CHECK(nfa_membership(u, rt::random_word(rng, rng() % 8, 2)));
  }
}

TEST_CASE("intersection accepts exactly the conjunction") {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 30; ++iter) {
    Nfa a = rt::random_nfa(rng);
    Nfa b = rt::random_nfa(rng);
    Nfa both = nfa_intersection(a, b);
    for (int s = 0; s < 20; ++s) {
      Word w = rt::random_word(rng, rng() % 6, 2);
      CHECK(nfa_membership(both, w) == (nfa_membership(a, w) && nfa_membership(b, w)));
    }
  }
}

TEST_CASE("intersection with an empty acceptor accepts nothing") {
  Nfa a = universal_nfa(Alphabet({"a", "b"}));
  Nfa none = make_nfa(Alphabet({"a", "b"}), {"s"}, 0, {});  // no accepting states
  none.transitions.resize(2);
  none.add_transition(0, 0, 0);
  none.add_transition(0, 1, 0);
  Nfa both = nfa_intersection(a, none);
  std::mt19937 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    CHECK(!nfa_membership(both, rt::random_word(rng, rng() % 6, 2)));
  }
}

TEST_CASE("run_transducer preserves length and is deterministic") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 30; ++iter) {
    Transducer t = rt::random_transducer(rng);
    Word x = rt::random_word(rng, rng() % 9, t.input.size());
    Word y = run_transducer(t, x);
    CHECK(y.size() == x.size());
    CHECK(run_transducer(t, x) == y);
  }
}

TEST_CASE("worked pair produces the documented outputs") {
  auto [t1, t2] = rt::worked_pair();
  Word ab = t1.input.parse_word({"a", "b"});
  Word ba = t1.input.parse_word({"b", "a"});
  CHECK(t1.output.format_word(run_transducer(t1, ab)) == "0 1");
  CHECK(t1.output.format_word(run_transducer(t1, ba)) == "0 1");
  CHECK(t2.output.format_word(run_transducer(t2, ab)) == "0 0");
  CHECK(t2.output.format_word(run_transducer(t2, ba)) == "1 0");
}

TEST_CASE("transducer validation rejects partial tables") {
  auto [t1, t2] = rt::worked_pair();
  Transducer broken = t1;
  broken.delta.pop_back();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = t1;
  broken.labels[0] = 99;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_SUITE_END();
