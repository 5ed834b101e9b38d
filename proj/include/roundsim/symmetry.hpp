#ifndef ROUNDSIM_SYMMETRY_HPP_
#define ROUNDSIM_SYMMETRY_HPP_

#include "roundsim/existential.hpp"
#include "roundsim/simulation.hpp"

namespace roundsim {

/// Permutation of process ids {0, ..., m-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<uint32_t> map);

  static Permutation identity(uint32_t m);
  static Permutation transposition(uint32_t m, uint32_t i, uint32_t j);
  /// The m-cycle 0 -> 1 -> ... -> m-1 -> 0.
  static Permutation cycle(uint32_t m);

  /// Parses either cycle notation "(1 2)(3)" or a mapping "2,1,3". Numerals
  /// may be 0-based or 1-based; 1-based is assumed when no 0 appears and some
  /// numeral equals m. Throws std::invalid_argument with a reason otherwise.
  static Permutation parse(const std::string& text, uint32_t m);

  uint32_t size() const { return static_cast<uint32_t>(map_.size()); }
  uint32_t apply(uint32_t i) const { return map_[i]; }
  uint32_t apply_inverse(uint32_t i) const { return inv_[i]; }
  bool is_identity() const;

  /// (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;

  std::string cycle_notation() const;

  bool operator==(const Permutation& o) const { return map_ == o.map_; }

 private:
  std::vector<uint32_t> map_;
  std::vector<uint32_t> inv_;
};

/// Alphabet of all subsets of {0, ..., m-1}; symbol index equals the bitmask,
/// names like "{}", "{0,2}". m <= 6 keeps the alphabet at most 64 letters.
Alphabet process_alphabet(uint32_t m);

/// Image of a subset-symbol under the permutation of process ids.
Symbol apply_permutation(const Permutation& pi, Symbol mask);

/// T^pi: runs T on the pi-preimage of the input and renames outputs forward,
/// so T^pi(x) = pi(T(pi^{-1}(x))). Both alphabets of `t` must be the
/// process-subset alphabet of pi's size.
Transducer permute_transducer(const Transducer& t, const Permutation& pi);

/// T is k-round symmetric w.r.t. pi iff T^pi is k-round simulated by T over
/// the unrestricted input language. The reverse simulation follows.
SimulationVerdict is_round_symmetric_wrt(const Transducer& t, const Permutation& pi, uint32_t k,
                                         const ContainmentOptions& opts = {});

/// Symmetry under the full symmetric group: checked on the two generators
/// (0 1) and the m-cycle. Returns the two verdicts; symmetric iff both hold.
struct SymmetryVerdict {
  bool symmetric = false;
  uint32_t k = 0;
  SimulationVerdict transposition;
  SimulationVerdict cycle;
};

SymmetryVerdict is_round_symmetric(const Transducer& t, uint32_t k,
                                   const ContainmentOptions& opts = {});

/// Smallest k <= k_max at which T is symmetric w.r.t. pi, with the same
/// profile memoization as the simulation search.
ExistentialVerdict existential_symmetry_wrt(const Transducer& t, const Permutation& pi,
                                            const ExistentialOptions& opts = {});

struct ExistentialSymmetryVerdict {
  bool found = false;
  uint32_t k = 0;
  uint32_t k_max = 0;
  std::vector<ProfileLogEntry> transposition_log;
  std::vector<ProfileLogEntry> cycle_log;
};

ExistentialSymmetryVerdict existential_symmetry(const Transducer& t,
                                                const ExistentialOptions& opts = {});

}  // namespace roundsim

#endif  // ROUNDSIM_SYMMETRY_HPP_
