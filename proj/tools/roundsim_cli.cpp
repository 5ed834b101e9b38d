// Command-line front end: fixed / equiv / existential / symmetry checks and
// instance generation. Exit codes: 0 = holds / found, 1 = refuted / not found
// up to the bound, 2 = usage or input error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "roundsim/existential.hpp"
#include "roundsim/generators.hpp"
#include "roundsim/io.hpp"
#include "roundsim/oracles.hpp"
#include "roundsim/simulation.hpp"
#include "roundsim/symmetry.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;
using namespace roundsim;

struct CommonOpts {
  uint64_t quotient_cap = 1000000;
  bool no_antichain = false;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--quotient-cap", c.quotient_cap,
                  "Abort a round length when its Parikh-pair alphabet exceeds this");
  cmd->add_flag("--no-antichain", c.no_antichain, "Disable antichain pruning (debugging)");
  cmd->add_flag("--json", c.as_json, "Emit a JSON report on stdout");
}

ContainmentOptions containment_opts(const CommonOpts& c) {
  ContainmentOptions o;
  o.quotient_cap = c.quotient_cap;
  o.antichain = !c.no_antichain;
  return o;
}

json verdict_json(const SimulationVerdict& v, const Transducer& t1) {
  json j;
  j["holds"] = v.holds;
  j["k"] = v.k;
  if (v.counterexample) {
    j["counterexample"] = {{"input", t1.input.format_word(v.counterexample->first)},
                           {"output", t1.output.format_word(v.counterexample->second)}};
  }
  j["stats"] = {{"configs_explored", v.stats.configs_explored},
                {"quotient_letters", v.stats.quotient_letters},
                {"distinct_letter_types", v.stats.distinct_letter_types},
                {"vacuous", v.stats.vacuous}};
  return j;
}

void print_verdict_text(const SimulationVerdict& v, const Transducer& t1) {
  std::cout << (v.holds ? "holds" : "refuted") << " at k=" << v.k << "\n";
  if (v.counterexample) {
    std::cout << "counterexample input:  " << t1.input.format_word(v.counterexample->first)
              << "\n"
              << "counterexample output: " << t1.output.format_word(v.counterexample->second)
              << "\n";
  }
}

json log_json(const std::vector<ProfileLogEntry>& log) {
  json arr = json::array();
  for (const ProfileLogEntry& e : log) {
    const char* status = e.status == ProfileLogEntry::Status::computed  ? "computed"
                         : e.status == ProfileLogEntry::Status::reused ? "reused"
                                                                       : "skipped";
    json j{{"k", e.k}, {"status", status}, {"seconds", e.seconds}};
    if (e.status != ProfileLogEntry::Status::skipped) {
      j["holds"] = e.holds;
      j["profile_size"] = e.profile_size;
      j["fingerprint"] = e.fingerprint;
    }
    if (e.status == ProfileLogEntry::Status::reused) j["reused_from"] = e.reused_from;
    arr.push_back(j);
  }
  return arr;
}

void progress_printer(const ProfileLogEntry& e) {
  std::cerr << "k=" << e.k << ": ";
  switch (e.status) {
    case ProfileLogEntry::Status::computed:
      std::cerr << (e.holds ? "holds" : "refuted") << " (computed, " << e.profile_size
                << " profile types, " << e.seconds << "s)";
      break;
    case ProfileLogEntry::Status::reused:
      std::cerr << (e.holds ? "holds" : "refuted") << " (profile matches k=" << e.reused_from
                << ")";
      break;
    case ProfileLogEntry::Status::skipped:
      std::cerr << "skipped (quotient alphabet over cap)";
      break;
  }
  std::cerr << "\n";
}

json report_header(const std::string& command) {
  return json{{"command", command}, {"version", kVersion}};
}

int run_fixed(const std::string& t1_path, const std::string& t2_path,
              const std::string& lambda_path, uint32_t k, const CommonOpts& c, bool use_oracle) {
  Transducer t1 = load_transducer_file(t1_path);
  Transducer t2 = load_transducer_file(t2_path);
  std::optional<Nfa> lambda;
  if (!lambda_path.empty()) lambda = load_nfa_file(lambda_path);

  if (use_oracle) {
    OracleBudget budget;
    budget.max_word_length = 4 * k;
    budget.max_rounds = 4;
    OracleResult r = oracle_fixed_simulation(t1, t2, lambda ? &*lambda : nullptr, k, budget);
    if (r.exceeded()) {
      std::cerr << "oracle budget exceeded\n";
      return 2;
    }
    bool holds = r.status == OracleStatus::holds;
    std::cout << "oracle: " << (holds ? "holds" : "refuted") << " at k=" << k << "\n";
    if (r.witness) std::cout << "witness input: " << t1.input.format_word(*r.witness) << "\n";
    return holds ? 0 : 1;
  }

  auto start = std::chrono::steady_clock::now();
  SimulationVerdict v = fixed_round_simulates(t1, t2, lambda ? &*lambda : nullptr, k,
                                              containment_opts(c));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.as_json) {
    json j = report_header("fixed");
    j["verdict"] = verdict_json(v, t1);
    j["seconds"] = secs;
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict_text(v, t1);
  }
  return v.holds ? 0 : 1;
}

int run_equiv(const std::string& t1_path, const std::string& t2_path,
              const std::string& lambda_path, uint32_t k, const CommonOpts& c) {
  Transducer t1 = load_transducer_file(t1_path);
  Transducer t2 = load_transducer_file(t2_path);
  std::optional<Nfa> lambda;
  if (!lambda_path.empty()) lambda = load_nfa_file(lambda_path);

  auto start = std::chrono::steady_clock::now();
  auto [fwd, bwd] = fixed_round_equivalent(t1, t2, lambda ? &*lambda : nullptr, k,
                                           containment_opts(c));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool holds = fwd.holds && bwd.holds;
  if (c.as_json) {
    json j = report_header("equiv");
    j["holds"] = holds;
    j["forward"] = verdict_json(fwd, t1);
    j["backward"] = verdict_json(bwd, t2);
    j["seconds"] = secs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "forward:  ";
    print_verdict_text(fwd, t1);
    std::cout << "backward: ";
    print_verdict_text(bwd, t2);
    std::cout << (holds ? "equivalent" : "not equivalent") << " at k=" << k << "\n";
  }
  return holds ? 0 : 1;
}

int run_existential(const std::string& t1_path, const std::string& t2_path,
                    const std::string& lambda_path, uint32_t max_k, bool both_directions,
                    bool dump_profiles, const CommonOpts& c) {
  Transducer t1 = load_transducer_file(t1_path);
  Transducer t2 = load_transducer_file(t2_path);
  std::optional<Nfa> lambda;
  if (!lambda_path.empty()) lambda = load_nfa_file(lambda_path);

  ExistentialOptions opts;
  opts.k_max = max_k;
  opts.quotient_cap = c.quotient_cap;
  opts.antichain = !c.no_antichain;
  opts.progress = progress_printer;
  if (dump_profiles) opts.dump_profiles = &std::cerr;

  json j = report_header(both_directions ? "existential-equiv" : "existential");
  bool found;
  uint32_t k_found = 0;
  if (both_directions) {
    ExistentialEquivalenceVerdict v =
        existential_equivalence(t1, t2, lambda ? &*lambda : nullptr, opts);
    found = v.found;
    k_found = v.k;
    j["forward_log"] = log_json(v.forward_log);
    j["backward_log"] = log_json(v.backward_log);
  } else {
    ExistentialVerdict v = existential_search(t1, t2, lambda ? &*lambda : nullptr, opts);
    found = v.found;
    k_found = v.k;
    j["log"] = log_json(v.log);
    j["reuse_count"] = v.reuse_count;
  }
  j["found"] = found;
  j["bounded_negative"] = !found;  // never a universal "no": search stopped at max-k
  j["k_max"] = max_k;
  if (found) j["k"] = k_found;

  if (c.as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (found) {
    std::cout << "found k=" << k_found << "\n";
  } else {
    std::cout << "not found up to k=" << max_k << " (bounded negative)\n";
  }
  return found ? 0 : 1;
}

int run_symmetry(const std::string& t_path, std::optional<uint32_t> k,
                 std::optional<uint32_t> max_k, const std::string& perm_text,
                 const CommonOpts& c) {
  Transducer t = load_transducer_file(t_path);
  uint32_t m = 0;
  while ((size_t{1} << m) < t.input.size()) ++m;
  if ((size_t{1} << m) != t.input.size() || !(t.input == t.output)) {
    std::cerr << "error: symmetry needs a transducer over the process-subset alphabet\n";
    return 2;
  }

  std::optional<Permutation> pi;
  if (!perm_text.empty()) pi = Permutation::parse(perm_text, m);

  json j = report_header("symmetry");
  j["processes"] = m;
  if (pi) j["permutation"] = pi->cycle_notation();

  if (k) {
    bool ok;
    if (pi) {
      SimulationVerdict v = is_round_symmetric_wrt(t, *pi, *k, containment_opts(c));
      ok = v.holds;
      j["verdict"] = verdict_json(v, t);
      if (!c.as_json) print_verdict_text(v, t);
    } else {
      SymmetryVerdict v = is_round_symmetric(t, *k, containment_opts(c));
      ok = v.symmetric;
      j["symmetric"] = v.symmetric;
      j["transposition"] = verdict_json(v.transposition, t);
      j["cycle"] = verdict_json(v.cycle, t);
      if (!c.as_json) {
        std::cout << (v.symmetric ? "symmetric" : "not symmetric") << " at k=" << *k
                  << " (transposition " << (v.transposition.holds ? "holds" : "fails")
                  << ", cycle " << (v.cycle.holds ? "holds" : "fails") << ")\n";
      }
    }
    if (c.as_json) std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  ExistentialOptions opts;
  opts.k_max = *max_k;
  opts.quotient_cap = c.quotient_cap;
  opts.antichain = !c.no_antichain;
  opts.progress = progress_printer;
  bool found;
  uint32_t k_found = 0;
  if (pi) {
    ExistentialVerdict v = existential_symmetry_wrt(t, *pi, opts);
    found = v.found;
    k_found = v.k;
    j["log"] = log_json(v.log);
  } else {
    ExistentialSymmetryVerdict v = existential_symmetry(t, opts);
    found = v.found;
    k_found = v.k;
    j["transposition_log"] = log_json(v.transposition_log);
    j["cycle_log"] = log_json(v.cycle_log);
  }
  j["found"] = found;
  j["bounded_negative"] = !found;
  j["k_max"] = *max_k;
  if (found) j["k"] = k_found;
  if (c.as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (found) {
    std::cout << "symmetric from k=" << k_found << "\n";
  } else {
    std::cout << "not symmetric up to k=" << *max_k << " (bounded negative)\n";
  }
  return found ? 0 : 1;
}

void write_bundle(const std::string& dir, const InstanceBundle& bundle, json manifest) {
  std::filesystem::create_directories(dir);
  save_transducer_file(dir + "/t1.txt", bundle.t1);
  save_transducer_file(dir + "/t2.txt", bundle.t2);
  manifest["files"] = {{"t1", "t1.txt"}, {"t2", "t2.txt"}};
  if (bundle.lambda) {
    save_nfa_file(dir + "/lambda.txt", *bundle.lambda);
    manifest["files"]["lambda"] = "lambda.txt";
  }
  json expected;
  if (bundle.expected.k) expected["k"] = *bundle.expected.k;
  if (bundle.expected.holds) expected["holds"] = *bundle.expected.holds;
  if (!bundle.expected.source.empty()) expected["source"] = bundle.expected.source;
  if (!bundle.expected.note.empty()) expected["note"] = bundle.expected.note;
  if (!expected.empty()) manifest["expected"] = expected;
  std::ofstream out(dir + "/manifest.json");
  if (!out) throw std::runtime_error("cannot write " + dir + "/manifest.json");
  out << manifest.dump(2) << "\n";
  std::cout << "wrote " << dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round simulation, equivalence, and process symmetry of transducers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // fixed
  auto* fixed = app.add_subcommand("fixed", "Fixed-k round simulation t1 by t2");
  std::string f_t1, f_t2, f_lambda;
  uint32_t f_k = 0;
  CommonOpts f_c;
  bool f_oracle = false;
  fixed->add_option("t1", f_t1, "Transducer file (simulated)")->required();
  fixed->add_option("t2", f_t2, "Transducer file (simulating)")->required();
  fixed->add_option("--lambda", f_lambda, "Input-restriction acceptor file (default: all words)");
  fixed->add_option("--k", f_k, "Round length")->required()->check(CLI::PositiveNumber);
  add_common(fixed, f_c);
  fixed->add_flag("--oracle", f_oracle)->group("");  // hidden: brute-force reference

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Fixed-k round equivalence");
  std::string e_t1, e_t2, e_lambda;
  uint32_t e_k = 0;
  CommonOpts e_c;
  equiv->add_option("t1", e_t1, "Transducer file")->required();
  equiv->add_option("t2", e_t2, "Transducer file")->required();
  equiv->add_option("--lambda", e_lambda, "Input-restriction acceptor file");
  equiv->add_option("--k", e_k, "Round length")->required()->check(CLI::PositiveNumber);
  add_common(equiv, e_c);

  // existential
  auto* exist = app.add_subcommand("existential", "Search k = 1..max-k for simulation");
  std::string x_t1, x_t2, x_lambda;
  uint32_t x_max_k = 16;
  bool x_equiv = false, x_dump = false;
  CommonOpts x_c;
  exist->add_option("t1", x_t1, "Transducer file")->required();
  exist->add_option("t2", x_t2, "Transducer file")->required();
  exist->add_option("--lambda", x_lambda, "Input-restriction acceptor file");
  exist->add_option("--max-k", x_max_k, "Search bound (default 16)")->check(CLI::PositiveNumber);
  exist->add_flag("--equiv", x_equiv, "Search for equivalence (both directions)");
  exist->add_flag("--dump-profiles", x_dump, "Dump type profiles per k to stderr");
  add_common(exist, x_c);

  // symmetry
  auto* sym = app.add_subcommand("symmetry", "Process symmetry of a subset-alphabet transducer");
  std::string s_t, s_perm;
  std::optional<uint32_t> s_k;
  uint32_t s_max_k = 16;
  bool s_max_given = false;
  CommonOpts s_c;
  sym->add_option("t", s_t, "Transducer file over the subset alphabet 2^{0..m-1}")->required();
  auto* s_k_opt = sym->add_option("--k", s_k, "Check this round length only")
                      ->check(CLI::PositiveNumber);
  sym->add_option("--max-k", s_max_k, "Search bound (default 16)")
      ->check(CLI::PositiveNumber)
      ->excludes(s_k_opt)
      ->each([&](const std::string&) { s_max_given = true; });
  sym->add_option("--perm", s_perm, "Single permutation, cycle notation \"(0 1)\" or mapping \"1,0,2\"");
  add_common(sym, s_c);
  (void)s_max_given;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate named instance bundles");
  gen->require_subcommand(1);
  std::string g_out = "bundle";
  uint32_t g_m = 2, g_start = 0;
  std::string g_nfa;
  bool g_padded = false;

  auto* gen_rr = gen->add_subcommand("roundrobin", "Round-robin scheduler pair");
  gen_rr->add_option("--m", g_m, "Process count")->required()->check(CLI::Range(2u, 6u));
  gen_rr->add_option("--start", g_start, "First grantable process of t2 (t1 starts at 0)");
  gen_rr->add_option("--out", g_out, "Output directory");

  auto* gen_pr = gen->add_subcommand("primes", "Exponential-round-length pair");
  gen_pr->add_option("--m", g_m, "Prime count")->required()->check(CLI::Range(1u, 4u));
  gen_pr->add_option("--out", g_out, "Output directory");

  auto* gen_un = gen->add_subcommand("universality", "Universality-to-equivalence reduction");
  gen_un->add_option("--nfa", g_nfa, "Source acceptor file (all states accepting, degree <= 2)")
      ->required();
  gen_un->add_flag("--padded", g_padded, "Padded variant (existential round length)");
  gen_un->add_option("--out", g_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize every usage problem to exit code 2; --help/--version stay 0.
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fixed) return run_fixed(f_t1, f_t2, f_lambda, f_k, f_c, f_oracle);
    if (*equiv) return run_equiv(e_t1, e_t2, e_lambda, e_k, e_c);
    if (*exist) return run_existential(x_t1, x_t2, x_lambda, x_max_k, x_equiv, x_dump, x_c);
    if (*sym) return run_symmetry(s_t, s_k, s_k ? std::nullopt : std::optional<uint32_t>(s_max_k),
                                  s_perm, s_c);
    if (*gen_rr) {
      InstanceBundle bundle{gen_round_robin(g_m, 0), gen_round_robin(g_m, g_start), std::nullopt,
                            {g_m, true, "stated", "round-robin starts are m-round equivalent"}};
      json manifest{{"family", "roundrobin"}, {"m", g_m}, {"start", g_start},
                    {"version", kVersion}};
      write_bundle(g_out, bundle, manifest);
      return 0;
    }
    if (*gen_pr) {
      InstanceBundle bundle = gen_prime_family(g_m);
      json manifest{{"family", "primes"}, {"m", g_m}, {"version", kVersion}};
      write_bundle(g_out, bundle, manifest);
      return 0;
    }
    if (*gen_un) {
      InstanceBundle bundle = gen_universality_reduction(load_nfa_file(g_nfa), g_padded);
      json manifest{{"family", "universality"}, {"padded", g_padded},
                    {"source_nfa", g_nfa}, {"version", kVersion}};
      write_bundle(g_out, bundle, manifest);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const QuotientCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --quotient-cap)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
