#ifndef ROUNDSIM_EXISTENTIAL_HPP_
#define ROUNDSIM_EXISTENTIAL_HPP_

#include <functional>

#include "roundsim/simulation.hpp"

namespace roundsim {

struct ProfileLogEntry {
  uint32_t k = 0;
  enum class Status { computed, reused, skipped } status = Status::computed;
  uint64_t fingerprint = 0;
  size_t profile_size = 0;
  uint32_t reused_from = 0;  // valid when status == reused
  bool holds = false;        // valid unless skipped
  double seconds = 0.0;
};

/// Result of the bounded search over round lengths. `found` with k, or a
/// bounded negative: "not found up to k_max" is never a universal no.
struct ExistentialVerdict {
  bool found = false;
  uint32_t k = 0;
  uint32_t k_max = 0;
  std::vector<ProfileLogEntry> log;
  uint32_t reuse_count = 0;
  std::optional<SimulationVerdict> witness;  // the holding verdict at k, when found
};

struct ExistentialOptions {
  uint32_t k_max = 16;
  uint64_t quotient_cap = 1000000;
  bool antichain = true;
  /// Re-run the full containment for every reused answer and require
  /// agreement (throws std::logic_error on mismatch). Test hook.
  bool verify_reuse = false;
  std::function<void(const ProfileLogEntry&)> progress;  // one call per k
  std::ostream* dump_profiles = nullptr;
};

/// Sweeps one containment direction over round lengths with type-profile
/// memoization: equal profiles at k and k' transfer the containment answer
/// because the two product automata share their transition relation.
class ExistentialEngine {
 public:
  ExistentialEngine(const Transducer& t1, const Transducer& t2, const Nfa* lambda,
                    ExistentialOptions opts);

  /// Containment answer at round length k, reusing earlier profiles when
  /// possible. Entries are appended to the log in call order.
  bool answer_at(uint32_t k);

  const std::vector<ProfileLogEntry>& log() const { return log_; }
  uint32_t reuse_count() const { return reuse_count_; }
  const std::optional<SimulationVerdict>& last_verdict() const { return last_verdict_; }

 private:
  ContainmentInstance inst_;
  ExistentialOptions opts_;
  struct SeenProfile {
    uint32_t k;
    TypeProfile profile;
    bool holds;
  };
  std::vector<SeenProfile> seen_;  // only computed (non-reused) entries
  std::vector<ProfileLogEntry> log_;
  uint32_t reuse_count_ = 0;
  std::optional<SimulationVerdict> last_verdict_;
};

ExistentialVerdict existential_search(const Transducer& t1, const Transducer& t2,
                                      const Nfa* lambda, const ExistentialOptions& opts = {});

/// Searches for one k at which both directions hold.
struct ExistentialEquivalenceVerdict {
  bool found = false;
  uint32_t k = 0;
  uint32_t k_max = 0;
  std::vector<ProfileLogEntry> forward_log;
  std::vector<ProfileLogEntry> backward_log;
};

ExistentialEquivalenceVerdict existential_equivalence(const Transducer& t1, const Transducer& t2,
                                                      const Nfa* lambda,
                                                      const ExistentialOptions& opts = {});

uint64_t profile_fingerprint(const TypeProfile& profile);

}  // namespace roundsim

#endif  // ROUNDSIM_EXISTENTIAL_HPP_
