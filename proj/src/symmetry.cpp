#include "roundsim/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace roundsim {

Permutation::Permutation(std::vector<uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (uint32_t v : map_) {
    if (v >= map_.size() || hit[v]) {
      throw std::invalid_argument("Permutation: not a bijection on {0..m-1}");
    }
    hit[v] = true;
  }
  inv_.resize(map_.size());
  for (uint32_t i = 0; i < map_.size(); ++i) inv_[map_[i]] = i;
}

Permutation Permutation::identity(uint32_t m) {
  std::vector<uint32_t> map(m);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

Permutation Permutation::transposition(uint32_t m, uint32_t i, uint32_t j) {
  if (i >= m || j >= m) throw std::invalid_argument("transposition: index out of range");
  std::vector<uint32_t> map(m);
  std::iota(map.begin(), map.end(), 0u);
  std::swap(map[i], map[j]);
  return Permutation(std::move(map));
}

Permutation Permutation::cycle(uint32_t m) {
  if (m == 0) throw std::invalid_argument("cycle: m must be positive");
  std::vector<uint32_t> map(m);
  for (uint32_t i = 0; i < m; ++i) map[i] = (i + 1) % m;
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<uint32_t> map(size());
  for (uint32_t i = 0; i < size(); ++i) map[i] = map_[other.map_[i]];
  return Permutation(std::move(map));
}

namespace {

std::vector<uint32_t> parse_numerals(const std::string& text, uint32_t m,
                                     std::vector<std::vector<uint32_t>>* cycles) {
  std::vector<uint32_t> all;
  if (cycles) cycles->clear();
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_num = [&]() -> uint32_t {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("permutation: expected a numeral at position " +
                                                std::to_string(start));
    return static_cast<uint32_t>(std::stoul(text.substr(start, i - start)));
  };
  if (text.find('(') != std::string::npos) {
    while (true) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(') throw std::invalid_argument("permutation: expected '('");
      ++i;
      std::vector<uint32_t> cyc;
      while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ')') { ++i; break; }
        if (i < text.size() && (text[i] == ',')) { ++i; continue; }
        cyc.push_back(read_num());
      }
      all.insert(all.end(), cyc.begin(), cyc.end());
      if (cycles) cycles->push_back(std::move(cyc));
    }
  } else {
    while (true) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] == ',') { ++i; continue; }
      all.push_back(read_num());
    }
    if (cycles) cycles->clear();  // mapping form, no cycles
  }
  (void)m;
  return all;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, uint32_t m) {
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<uint32_t> nums = parse_numerals(text, m, &cycles);
  if (nums.empty()) throw std::invalid_argument("permutation: empty");
  // Accept both 0-based and 1-based numerals: shift down when nothing is 0
  // and something reaches m.
  bool has_zero = std::find(nums.begin(), nums.end(), 0u) != nums.end();
  bool has_m = std::find(nums.begin(), nums.end(), m) != nums.end();
  uint32_t shift = (!has_zero && has_m) ? 1 : 0;
  auto adjust = [&](uint32_t v) {
    if (v < shift || v - shift >= m) {
      throw std::invalid_argument("permutation: process id " + std::to_string(v) +
                                  " out of range for m=" + std::to_string(m));
    }
    return v - shift;
  };

  if (text.find('(') != std::string::npos) {
    std::vector<uint32_t> map(m);
    std::iota(map.begin(), map.end(), 0u);
    std::vector<bool> seen(m, false);
    for (const auto& cyc : cycles) {
      for (size_t j = 0; j < cyc.size(); ++j) {
        uint32_t from = adjust(cyc[j]);
        uint32_t to = adjust(cyc[(j + 1) % cyc.size()]);
        if (seen[from]) throw std::invalid_argument("permutation: repeated id in cycles");
        seen[from] = true;
        map[from] = to;
      }
    }
    return Permutation(std::move(map));
  }

  if (nums.size() != m) {
    throw std::invalid_argument("permutation: mapping form needs exactly m=" + std::to_string(m) +
                                " entries, got " + std::to_string(nums.size()));
  }
  std::vector<uint32_t> map(m);
  for (uint32_t i = 0; i < m; ++i) map[i] = adjust(nums[i]);
  return Permutation(std::move(map));
}

std::string Permutation::cycle_notation() const {
  std::ostringstream out;
  std::vector<bool> seen(size(), false);
  bool any = false;
  for (uint32_t i = 0; i < size(); ++i) {
    if (seen[i] || map_[i] == i) { seen[i] = true; continue; }
    out << '(';
    uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = map_[j];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

Alphabet process_alphabet(uint32_t m) {
  if (m == 0 || m > 6) throw std::invalid_argument("process_alphabet: need 1 <= m <= 6");
  std::vector<std::string> names;
  names.reserve(size_t{1} << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::string name = "{";
    bool first = true;
    for (uint32_t p = 0; p < m; ++p) {
      if (mask & (1u << p)) {
        if (!first) name += ',';
        name += std::to_string(p);
        first = false;
      }
    }
    name += '}';
    names.push_back(std::move(name));
  }
  return Alphabet(std::move(names));
}

Symbol apply_permutation(const Permutation& pi, Symbol mask) {
  Symbol out = 0;
  for (uint32_t p = 0; p < pi.size(); ++p) {
    if (mask & (Symbol{1} << p)) out |= Symbol{1} << pi.apply(p);
  }
  return out;
}

Transducer permute_transducer(const Transducer& t, const Permutation& pi) {
  const size_t want = size_t{1} << pi.size();
  if (t.input.size() != want || t.output.size() != want || !(t.input == t.output)) {
    throw std::invalid_argument("permute_transducer: alphabets are not the process-subset "
                                "alphabet of the permutation's size");
  }
  Transducer out = t;
  for (State q = 0; q < t.num_states(); ++q) {
    for (Symbol a = 0; a < t.input.size(); ++a) {
      // delta^pi(q, a) = delta(q, pi^{-1}(a)); pi^{-1} of a mask permutes each
      // member through the inverse.
      Symbol pre = 0;
      for (uint32_t p = 0; p < pi.size(); ++p) {
        if (a & (Symbol{1} << p)) pre |= Symbol{1} << pi.apply_inverse(p);
      }
      out.delta[q * t.input.size() + a] = t.step(q, pre);
    }
    out.labels[q] = apply_permutation(pi, t.label(q));
  }
  return out;
}

SimulationVerdict is_round_symmetric_wrt(const Transducer& t, const Permutation& pi, uint32_t k,
                                         const ContainmentOptions& opts) {
  Transducer tp = permute_transducer(t, pi);
  return fixed_round_simulates(tp, t, nullptr, k, opts);
}

SymmetryVerdict is_round_symmetric(const Transducer& t, uint32_t k,
                                   const ContainmentOptions& opts) {
  uint32_t m = 0;
  while ((size_t{1} << m) < t.input.size()) ++m;
  if ((size_t{1} << m) != t.input.size()) {
    throw std::invalid_argument("is_round_symmetric: input alphabet size is not a power of two");
  }
  SymmetryVerdict out;
  out.k = k;
  if (m < 2) {
    // The symmetric group on fewer than two processes is trivial.
    out.symmetric = true;
    out.transposition.holds = out.cycle.holds = true;
    out.transposition.k = out.cycle.k = k;
    return out;
  }
  out.transposition = is_round_symmetric_wrt(t, Permutation::transposition(m, 0, 1), k, opts);
  out.cycle = is_round_symmetric_wrt(t, Permutation::cycle(m), k, opts);
  out.symmetric = out.transposition.holds && out.cycle.holds;
  return out;
}

ExistentialVerdict existential_symmetry_wrt(const Transducer& t, const Permutation& pi,
                                            const ExistentialOptions& opts) {
  Transducer tp = permute_transducer(t, pi);
  return existential_search(tp, t, nullptr, opts);
}

ExistentialSymmetryVerdict existential_symmetry(const Transducer& t,
                                                const ExistentialOptions& opts) {
  uint32_t m = 0;
  while ((size_t{1} << m) < t.input.size()) ++m;
  if ((size_t{1} << m) != t.input.size()) {
    throw std::invalid_argument("existential_symmetry: input alphabet size is not a power of two");
  }
  ExistentialSymmetryVerdict out;
  out.k_max = opts.k_max;
  if (m < 2) {
    out.found = true;
    out.k = 1;
    return out;
  }
  Transducer tt = permute_transducer(t, Permutation::transposition(m, 0, 1));
  Transducer tc = permute_transducer(t, Permutation::cycle(m));
  ExistentialEngine et(tt, t, nullptr, opts);
  ExistentialEngine ec(tc, t, nullptr, opts);
  for (uint32_t k = 1; k <= opts.k_max; ++k) {
    if (et.answer_at(k) && ec.answer_at(k)) {
      out.found = true;
      out.k = k;
      break;
    }
  }
  out.transposition_log = et.log();
  out.cycle_log = ec.log();
  return out;
}

}  // namespace roundsim
