#ifndef ROUNDSIM_IO_HPP_
#define ROUNDSIM_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "roundsim/nfa.hpp"
#include "roundsim/transducer.hpp"

namespace roundsim {

/// Parse failure with 1-based line number; line 0 means a file-level problem
/// (missing section, unreadable file).
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t line);
  size_t line;
};

/// Text format, one item per line, '#' starts a comment:
///   alphabet: a b c
///   states: s0 s1
///   initial: s0
///   accepting: s0 s1
///   trans: s0 a s1        (repeated)
Nfa load_nfa(std::istream& in);
Nfa load_nfa_file(const std::string& path);
void save_nfa(std::ostream& out, const Nfa& n);
void save_nfa_file(const std::string& path, const Nfa& n);

/// Text format:
///   input: a b
///   output: 0 1
///   states: q0 q1
///   initial: q0
///   label: q0 1           (one per state)
///   trans: q0 a q1        (exactly |states| * |input| lines; partial
///                          transducers are rejected, not completed)
Transducer load_transducer(std::istream& in);
Transducer load_transducer_file(const std::string& path);
void save_transducer(std::ostream& out, const Transducer& t);
void save_transducer_file(const std::string& path, const Transducer& t);

}  // namespace roundsim

#endif  // ROUNDSIM_IO_HPP_
