#include "roundsim/existential.hpp"

#include <chrono>
#include <ostream>

namespace roundsim {

uint64_t profile_fingerprint(const TypeProfile& profile) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const BitMatrix& m : profile.matrices) mix(m.bytes());
  return h;
}

ExistentialEngine::ExistentialEngine(const Transducer& t1, const Transducer& t2,
                                     const Nfa* lambda, ExistentialOptions opts)
    : inst_(ContainmentInstance::from(build_redundant_product(t1, t2, lambda))),
      opts_(std::move(opts)) {}

bool ExistentialEngine::answer_at(uint32_t k) {
  auto t0 = std::chrono::steady_clock::now();
  ProfileLogEntry entry;
  entry.k = k;

  ContainmentOptions copts;
  copts.antichain = opts_.antichain;
  copts.quotient_cap = opts_.quotient_cap;

  auto finish = [&](bool holds) {
    entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    entry.holds = holds;
    log_.push_back(entry);
    if (opts_.progress) opts_.progress(entry);
    return holds;
  };

  uint64_t n_pairs = count_parikh_pairs(inst_.table->product_alphabet().input.size(),
                                        inst_.table->product_alphabet().output.size(), k);
  if (n_pairs > opts_.quotient_cap) {
    entry.status = ProfileLogEntry::Status::skipped;
    return finish(false);
  }

  TypeProfile profile = type_profile(*inst_.table, k);
  entry.fingerprint = profile_fingerprint(profile);
  entry.profile_size = profile.matrices.size();
  if (opts_.dump_profiles) {
    *opts_.dump_profiles << "k=" << k << " profile (" << profile.matrices.size() << " types)\n";
    dump_profile(*opts_.dump_profiles, profile);
  }

  // Equal profiles at two round lengths give equal quotient automata up to
  // letter renaming, so the containment answer transfers. Fingerprints only
  // shortlist candidates; reuse requires full profile equality.
  for (const SeenProfile& sp : seen_) {
    if (sp.profile == profile) {
      if (opts_.verify_reuse) {
        SimulationVerdict fresh = quotient_containment(inst_.a1(k), inst_.a2(k), copts);
        if (fresh.holds != sp.holds) {
          throw std::logic_error("profile reuse mismatch at k=" + std::to_string(k) +
                                 " (reused from k=" + std::to_string(sp.k) + ")");
        }
      }
      entry.status = ProfileLogEntry::Status::reused;
      entry.reused_from = sp.k;
      ++reuse_count_;
      last_verdict_.reset();
      return finish(sp.holds);
    }
  }

  SimulationVerdict v = quotient_containment(inst_.a1(k), inst_.a2(k), copts);
  seen_.push_back(SeenProfile{k, std::move(profile), v.holds});
  last_verdict_ = std::move(v);
  entry.status = ProfileLogEntry::Status::computed;
  return finish(last_verdict_->holds);
}

ExistentialVerdict existential_search(const Transducer& t1, const Transducer& t2,
                                      const Nfa* lambda, const ExistentialOptions& opts) {
  ExistentialEngine engine(t1, t2, lambda, opts);
  ExistentialVerdict out;
  out.k_max = opts.k_max;
  for (uint32_t k = 1; k <= opts.k_max; ++k) {
    if (engine.answer_at(k)) {
      out.found = true;
      out.k = k;
      if (engine.last_verdict()) out.witness = *engine.last_verdict();
      break;
    }
  }
  out.log = engine.log();
  out.reuse_count = engine.reuse_count();
  return out;
}

ExistentialEquivalenceVerdict existential_equivalence(const Transducer& t1, const Transducer& t2,
                                                      const Nfa* lambda,
                                                      const ExistentialOptions& opts) {
  ExistentialEngine fwd(t1, t2, lambda, opts);
  ExistentialEngine bwd(t2, t1, lambda, opts);
  ExistentialEquivalenceVerdict out;
  out.k_max = opts.k_max;
  for (uint32_t k = 1; k <= opts.k_max; ++k) {
    // Lockstep: the backward direction is only consulted when the forward one
    // holds, so refuted round lengths cost a single containment.
    if (fwd.answer_at(k) && bwd.answer_at(k)) {
      out.found = true;
      out.k = k;
      break;
    }
  }
  out.forward_log = fwd.log();
  out.backward_log = bwd.log();
  return out;
}

}  // namespace roundsim
