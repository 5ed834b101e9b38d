#include "roundsim/generators.hpp"

#include <cassert>
#include <stdexcept>

#include "roundsim/symmetry.hpp"

namespace roundsim {

Transducer gen_round_robin(uint32_t m, uint32_t start) {
  if (m < 2) throw std::invalid_argument("gen_round_robin: need m >= 2");
  if (start >= m) throw std::invalid_argument("gen_round_robin: start out of range");
  Transducer t;
  t.input = process_alphabet(m);
  t.output = t.input;
  // q_i = grant states (first m), q'_i = skip states (last m).
  for (uint32_t i = 0; i < m; ++i) t.state_names.push_back("q" + std::to_string(i));
  for (uint32_t i = 0; i < m; ++i) t.state_names.push_back("q'" + std::to_string(i));
  t.labels.resize(2 * m);
  for (uint32_t i = 0; i < m; ++i) {
    t.labels[i] = Symbol{1} << i;  // {i}
    t.labels[m + i] = 0;           // {}
  }
  t.delta.resize(2 * m * t.input.size());
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t next = (i + 1) % m;
    for (Symbol sigma = 0; sigma < t.input.size(); ++sigma) {
      State to = (sigma & (Symbol{1} << next)) ? next : m + next;
      t.delta[i * t.input.size() + sigma] = to;
      t.delta[(m + i) * t.input.size() + sigma] = to;
    }
  }
  // The label of the initial state is never emitted, so start the cycle one
  // step before the first grantable process.
  t.initial = (start + m - 1) % m;
  t.validate();
  return t;
}

InstanceBundle gen_prime_family(uint32_t m) {
  static const uint32_t primes[] = {2, 3, 5, 7};
  if (m < 1 || m > 4) throw std::invalid_argument("gen_prime_family: need 1 <= m <= 4");

  std::vector<std::string> in_names, out_names;
  for (uint32_t i = 1; i <= m; ++i) in_names.push_back(std::to_string(i));
  out_names = in_names;
  out_names.push_back("-");  // empty label of the hub and the sinks
  Alphabet in(in_names), out(out_names);
  const Symbol dash = static_cast<Symbol>(out.size() - 1);

  // T1: copies (1 2 ... m)* to the output; anything off-cycle dies in a sink.
  Transducer t1;
  t1.input = in;
  t1.output = out;
  for (uint32_t i = 1; i <= m; ++i) t1.state_names.push_back("s" + std::to_string(i));
  t1.state_names.push_back("sink");
  const State sink1 = m;
  t1.labels.resize(m + 1);
  for (uint32_t i = 0; i < m; ++i) t1.labels[i] = i;  // output letter "i+1"
  t1.labels[sink1] = dash;
  t1.delta.assign((m + 1) * in.size(), sink1);
  for (uint32_t i = 0; i < m; ++i) {
    // s_{i+1} advances only on the next letter of the cycle.
    uint32_t next = (i + 1) % m;
    t1.delta[i * in.size() + next] = next;
  }
  t1.initial = m - 1;  // s_m, so the first expected letter is "1"
  t1.validate();

  // T2: hub-and-spokes. Reading letter i at the hub commits to outputting i
  // for p_i steps, irrespective of the letters read meanwhile.
  Transducer t2;
  t2.input = in;
  t2.output = out;
  t2.state_names.push_back("h");
  std::vector<std::vector<State>> spoke(m);  // spoke[i][j] = state s_{i+1}^{j+1}
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 1; j <= primes[i]; ++j) {
      spoke[i].push_back(static_cast<State>(t2.state_names.size()));
      t2.state_names.push_back("s" + std::to_string(i + 1) + "^" + std::to_string(j));
    }
  }
  const State sink2 = static_cast<State>(t2.state_names.size());
  t2.state_names.push_back("sink");
  t2.labels.resize(t2.state_names.size());
  t2.labels[0] = dash;
  for (uint32_t i = 0; i < m; ++i) {
    for (State s : spoke[i]) t2.labels[s] = i;
  }
  t2.labels[sink2] = dash;
  t2.delta.assign(t2.state_names.size() * in.size(), sink2);
  for (Symbol l = 0; l < in.size(); ++l) {
    t2.delta[0 * in.size() + l] = spoke[l][0];  // hub commits to spoke l
  }
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j + 1 < primes[i]; ++j) {
      for (Symbol l = 0; l < in.size(); ++l) {
        t2.delta[spoke[i][j] * in.size() + l] = spoke[i][j + 1];
      }
    }
    // End of the spoke behaves like the hub.
    for (Symbol l = 0; l < in.size(); ++l) {
      t2.delta[spoke[i].back() * in.size() + l] = spoke[l][0];
    }
  }
  t2.initial = 0;
  t2.validate();

  uint32_t spokes_total = 0;
  for (uint32_t i = 0; i < m; ++i) spokes_total += primes[i];
  assert(t2.num_states() == 1 + spokes_total + 1);

  // lambda = (1 2 ... m)*, one state per cycle position.
  Nfa lambda;
  lambda.alphabet = in;
  for (uint32_t i = 0; i < m; ++i) lambda.state_names.push_back("l" + std::to_string(i));
  lambda.initial = 0;
  lambda.accepting.assign(m, false);
  lambda.accepting[0] = true;
  lambda.transitions.resize(m * in.size());
  for (uint32_t i = 0; i < m; ++i) lambda.add_transition(i, i, (i + 1) % m);
  lambda.validate();

  InstanceBundle bundle{std::move(t1), std::move(t2), std::move(lambda), {}};
  // The simulation holds exactly when m divides k and at most one spoke length
  // fails to divide k/m: only one output block can straddle each round
  // boundary, and that letter's residue cycles back to zero on its own. The
  // minimal such k is m times the product of all spoke lengths but the
  // largest (and 1 for m = 1, where both transducers output plain 1-runs).
  bundle.expected.holds = true;
  if (m == 1) {
    bundle.expected.k = 1;
    bundle.expected.source = "computed";
    bundle.expected.note = "minimal round length; both transducers emit identical runs";
  } else if (m == 2) {
    bundle.expected.k = 4;  // m * p_1; only the 3-blocks straddle boundaries
    bundle.expected.source = "computed";
    bundle.expected.note =
        "minimal round length for t1 to be simulated by t2 under lambda; "
        "k = 6, 8 and every multiple of 4 or 6 work as well";
  } else {
    uint32_t k = m;
    for (uint32_t i = 0; i < m; ++i) k *= primes[i];
    bundle.expected.k = k;
    bundle.expected.source = "stated";
    bundle.expected.note =
        "round length at which the simulation holds; smaller multiples of m "
        "with at most one non-dividing spoke length work as well";
  }
  return bundle;
}

namespace {

// lambda for the two-letter-block encoding: (B_0 + B_1 + ... [+ ##])* where
// B_i is the first block letter of input letter i followed by the second. One
// mid-block state per letter, plus a dead state making the DFA complete.
Nfa block_lambda(const Alphabet& sigma_i, size_t n_letters, bool padded) {
  Nfa lambda;
  lambda.alphabet = sigma_i;
  lambda.state_names.push_back("l0");
  for (size_t i = 0; i < n_letters; ++i) lambda.state_names.push_back("l" + std::to_string(i + 1));
  if (padded) lambda.state_names.push_back("lp");
  lambda.state_names.push_back("dead");
  const State dead = static_cast<State>(lambda.state_names.size() - 1);
  lambda.initial = 0;
  lambda.accepting.assign(lambda.state_names.size(), false);
  lambda.accepting[0] = true;
  lambda.transitions.resize(lambda.state_names.size() * sigma_i.size());
  for (State q = 0; q < lambda.num_states(); ++q) {
    for (Symbol s = 0; s < sigma_i.size(); ++s) lambda.add_transition(q, s, dead);
  }
  auto set_edge = [&](State q, Symbol s, State to) {
    lambda.transitions[q * sigma_i.size() + s] = {to};
  };
  for (size_t i = 0; i < n_letters; ++i) {
    set_edge(0, static_cast<Symbol>(2 * i), static_cast<State>(i + 1));
    set_edge(static_cast<State>(i + 1), static_cast<Symbol>(2 * i + 1), 0);
  }
  if (padded) {
    Symbol hash = static_cast<Symbol>(sigma_i.size() - 1);
    set_edge(0, hash, static_cast<State>(n_letters + 1));
    set_edge(static_cast<State>(n_letters + 1), hash, 0);
  }
  lambda.validate();
  return lambda;
}

}  // namespace

InstanceBundle gen_universality_reduction(const Nfa& n, bool padded) {
  for (bool acc : n.accepting) {
    if (!acc) throw std::invalid_argument("gen_universality_reduction: all states must accept");
  }
  const size_t nl = n.alphabet.size();
  for (State q = 0; q < n.num_states(); ++q) {
    for (Symbol s = 0; s < nl; ++s) {
      if (n.successors(q, s).size() > 2) {
        throw std::invalid_argument(
            "gen_universality_reduction: branching degree exceeds 2; apply reduce_branching");
      }
    }
  }

  // Two input letters per NFA letter; reading them in order takes the first
  // nondeterministic branch, swapped the second. {0,1} gets the classic
  // a,b,c,d names.
  std::vector<std::string> in_names;
  if (nl == 2) {
    in_names = {"a", "b", "c", "d"};
  } else {
    for (size_t i = 0; i < nl; ++i) {
      in_names.push_back("a" + std::to_string(i));
      in_names.push_back("b" + std::to_string(i));
    }
  }
  if (padded) in_names.push_back("#");
  Alphabet sigma_i(in_names);
  Alphabet sigma_o({"T", "F"});
  const Symbol top = 0, bot = 1;
  const Symbol hash = padded ? static_cast<Symbol>(sigma_i.size() - 1) : 0;

  // T1 accepts exactly lambda, outputting T while on track and F forever after
  // the first deviation.
  Transducer t1;
  t1.input = sigma_i;
  t1.output = sigma_o;
  t1.state_names.push_back("u0");
  for (size_t i = 0; i < nl; ++i) t1.state_names.push_back("u" + std::to_string(i + 1));
  if (padded) t1.state_names.push_back("u#");
  t1.state_names.push_back("sink");
  const State t1_sink = static_cast<State>(t1.state_names.size() - 1);
  t1.labels.assign(t1.state_names.size(), top);
  t1.labels[t1_sink] = bot;
  t1.delta.assign(t1.state_names.size() * sigma_i.size(), t1_sink);
  for (size_t i = 0; i < nl; ++i) {
    t1.delta[0 * sigma_i.size() + 2 * i] = static_cast<State>(i + 1);
    t1.delta[(i + 1) * sigma_i.size() + 2 * i + 1] = 0;
  }
  if (padded) {
    const State u_hash = t1_sink - 1;
    t1.delta[0 * sigma_i.size() + hash] = u_hash;
    t1.delta[u_hash * sigma_i.size() + hash] = 0;
  }
  t1.initial = 0;
  t1.validate();

  // T2 embeds n: from a state q of n, the two-letter block of letter s in
  // either order selects one of the (at most two) successors; everything
  // undefined falls into the F-labelled sink.
  Transducer t2;
  t2.input = sigma_i;
  t2.output = sigma_o;
  auto name_of = [&](State q) { return n.state_names[q]; };
  // State layout: n-states first, then per (q) the 2*nl mid-block states,
  // then per q a #-state when padded, then the sink.
  std::vector<State> mid(n.num_states() * 2 * nl);
  for (State q = 0; q < n.num_states(); ++q) t2.state_names.push_back(name_of(q));
  for (State q = 0; q < n.num_states(); ++q) {
    for (size_t h = 0; h < 2 * nl; ++h) {
      mid[q * 2 * nl + h] = static_cast<State>(t2.state_names.size());
      t2.state_names.push_back(name_of(q) + "_" + sigma_i.name(static_cast<Symbol>(h)));
    }
  }
  std::vector<State> hash_state;
  if (padded) {
    for (State q = 0; q < n.num_states(); ++q) {
      hash_state.push_back(static_cast<State>(t2.state_names.size()));
      t2.state_names.push_back(name_of(q) + "_#");
    }
  }
  const State t2_sink = static_cast<State>(t2.state_names.size());
  t2.state_names.push_back("sink");
  t2.labels.assign(t2.state_names.size(), top);
  t2.labels[t2_sink] = bot;
  t2.delta.assign(t2.state_names.size() * sigma_i.size(), t2_sink);
  for (State q = 0; q < n.num_states(); ++q) {
    for (size_t s = 0; s < nl; ++s) {
      const auto& succ = n.successors(q, static_cast<Symbol>(s));
      if (succ.empty()) continue;  // both block orders die in the sink
      State first = succ[0];
      State second = succ.size() > 1 ? succ[1] : succ[0];
      State qa = mid[q * 2 * nl + 2 * s];
      State qb = mid[q * 2 * nl + 2 * s + 1];
      t2.delta[q * sigma_i.size() + 2 * s] = qa;
      t2.delta[q * sigma_i.size() + 2 * s + 1] = qb;
      t2.delta[qa * sigma_i.size() + 2 * s + 1] = first;
      t2.delta[qb * sigma_i.size() + 2 * s] = second;
    }
    if (padded) {
      t2.delta[q * sigma_i.size() + hash] = hash_state[q];
      t2.delta[hash_state[q] * sigma_i.size() + hash] = q;
    }
  }
  t2.initial = n.initial;
  t2.validate();

  InstanceBundle bundle{std::move(t1), std::move(t2), block_lambda(sigma_i, nl, padded), {}};
  bundle.expected.k = padded ? std::optional<uint32_t>{} : std::optional<uint32_t>{2};
  bundle.expected.source = "stated";
  bundle.expected.note = padded
      ? "equivalent at some round length iff the source acceptor is universal"
      : "2-round equivalent under lambda iff the source acceptor is universal";
  return bundle;
}

Nfa reduce_branching(const Nfa& n) {
  bool compliant = true;
  for (State q = 0; q < n.num_states() && compliant; ++q) {
    for (Symbol s = 0; s < n.alphabet.size(); ++s) {
      if (n.successors(q, s).size() > 2) {
        compliant = false;
        break;
      }
    }
  }
  if (compliant) return n;

  std::vector<std::string> names = n.alphabet.names();
  names.push_back("$");
  Alphabet ext(names);
  const Symbol dollar = static_cast<Symbol>(ext.size() - 1);

  Nfa out;
  out.alphabet = ext;
  out.state_names = n.state_names;
  out.initial = n.initial;
  out.accepting = n.accepting;
  out.transitions.resize(n.num_states() * ext.size());

  // Recursively split a successor list: a node with more than two targets
  // forwards to two fresh $-reading children covering each half.
  uint32_t fresh = 0;
  auto split = [&](auto&& self, std::vector<State> targets) -> std::pair<State, State> {
    // Returns the (at most) two direct targets covering `targets`.
    if (targets.size() <= 2) {
      return {targets[0], targets.size() > 1 ? targets[1] : targets[0]};
    }
    auto make_node = [&](std::vector<State> part) -> State {
      if (part.size() == 1) return part[0];
      State v = static_cast<State>(out.state_names.size());
      out.state_names.push_back("t" + std::to_string(fresh++));
      out.accepting.push_back(true);
      out.transitions.resize(out.state_names.size() * ext.size());
      auto [l, r] = self(self, std::move(part));
      out.add_transition(v, dollar, l);
      if (r != l) out.add_transition(v, dollar, r);
      return v;
    };
    size_t half = targets.size() / 2;
    std::vector<State> left(targets.begin(), targets.begin() + half);
    std::vector<State> right(targets.begin() + half, targets.end());
    return {make_node(std::move(left)), make_node(std::move(right))};
  };

  for (State q = 0; q < n.num_states(); ++q) {
    for (Symbol s = 0; s < n.alphabet.size(); ++s) {
      const auto& succ = n.successors(q, s);
      if (succ.empty()) continue;
      auto [l, r] = split(split, succ);
      out.add_transition(q, s, l);
      if (r != l) out.add_transition(q, s, r);
    }
  }
  out.validate();
  return out;
}

}  // namespace roundsim
