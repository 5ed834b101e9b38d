#include "roundsim/io.hpp"

#include <fstream>
#include <sstream>

namespace roundsim {

ParseError::ParseError(const std::string& what, size_t line_)
    : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + what : what),
      line(line_) {}

namespace {

struct Line {
  size_t number;
  std::string keyword;
  std::vector<std::string> fields;
};

// Strips comments and blanks; splits "keyword: f1 f2 ..." lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.back() != ':') throw ParseError("expected 'keyword:', got '" + first + "'", number);
    first.pop_back();
    Line line{number, first, {}};
    std::string field;
    while (ls >> field) line.fields.push_back(field);
    lines.push_back(std::move(line));
  }
  return lines;
}

const Line& unique_line(const std::vector<Line>& lines, const std::string& keyword) {
  const Line* found = nullptr;
  for (const Line& l : lines) {
    if (l.keyword != keyword) continue;
    if (found) throw ParseError("duplicate '" + keyword + ":' section", l.number);
    found = &l;
  }
  if (!found) throw ParseError("missing '" + keyword + ":' section", 0);
  return *found;
}

Symbol symbol_at(const Alphabet& a, const std::string& name, size_t line) {
  if (!a.contains(name)) throw ParseError("unknown symbol '" + name + "'", line);
  return a.index_of(name);
}

State state_at(const std::vector<std::string>& names, const std::string& name, size_t line) {
  for (State q = 0; q < names.size(); ++q) {
    if (names[q] == name) return q;
  }
  throw ParseError("unknown state '" + name + "'", line);
}

std::vector<std::string> unique_names(const Line& l, const char* what) {
  if (l.fields.empty()) throw ParseError(std::string("empty '") + what + ":' section", l.number);
  for (size_t i = 0; i < l.fields.size(); ++i) {
    for (size_t j = i + 1; j < l.fields.size(); ++j) {
      if (l.fields[i] == l.fields[j]) {
        throw ParseError("duplicate name '" + l.fields[i] + "'", l.number);
      }
    }
  }
  return l.fields;
}

}  // namespace

Nfa load_nfa(std::istream& in) {
  auto lines = tokenize(in);
  Nfa n;
  n.alphabet = Alphabet(unique_names(unique_line(lines, "alphabet"), "alphabet"));
  n.state_names = unique_names(unique_line(lines, "states"), "states");

  const Line& init = unique_line(lines, "initial");
  if (init.fields.size() != 1) throw ParseError("'initial:' takes one state", init.number);
  n.initial = state_at(n.state_names, init.fields[0], init.number);

  n.accepting.assign(n.num_states(), false);
  const Line& acc = unique_line(lines, "accepting");
  for (const std::string& name : acc.fields) {
    n.accepting[state_at(n.state_names, name, acc.number)] = true;
  }

  n.transitions.resize(n.num_states() * n.alphabet.size());
  for (const Line& l : lines) {
    if (l.keyword == "alphabet" || l.keyword == "states" || l.keyword == "initial" ||
        l.keyword == "accepting") {
      continue;
    }
    if (l.keyword != "trans") throw ParseError("unknown keyword '" + l.keyword + ":'", l.number);
    if (l.fields.size() != 3) throw ParseError("'trans:' takes: state symbol state", l.number);
    n.add_transition(state_at(n.state_names, l.fields[0], l.number),
                     symbol_at(n.alphabet, l.fields[1], l.number),
                     state_at(n.state_names, l.fields[2], l.number));
  }
  n.validate();
  return n;
}

Transducer load_transducer(std::istream& in) {
  auto lines = tokenize(in);
  Transducer t;
  t.input = Alphabet(unique_names(unique_line(lines, "input"), "input"));
  t.output = Alphabet(unique_names(unique_line(lines, "output"), "output"));
  t.state_names = unique_names(unique_line(lines, "states"), "states");

  const Line& init = unique_line(lines, "initial");
  if (init.fields.size() != 1) throw ParseError("'initial:' takes one state", init.number);
  t.initial = state_at(t.state_names, init.fields[0], init.number);

  const State unset = static_cast<State>(t.num_states());
  const Symbol unset_label = static_cast<Symbol>(t.output.size());
  t.labels.assign(t.num_states(), unset_label);
  t.delta.assign(t.num_states() * t.input.size(), unset);

  for (const Line& l : lines) {
    if (l.keyword == "input" || l.keyword == "output" || l.keyword == "states" ||
        l.keyword == "initial") {
      continue;
    }
    if (l.keyword == "label") {
      if (l.fields.size() != 2) throw ParseError("'label:' takes: state symbol", l.number);
      State q = state_at(t.state_names, l.fields[0], l.number);
      if (t.labels[q] != unset_label) {
        throw ParseError("state '" + l.fields[0] + "' labelled twice", l.number);
      }
      t.labels[q] = symbol_at(t.output, l.fields[1], l.number);
    } else if (l.keyword == "trans") {
      if (l.fields.size() != 3) throw ParseError("'trans:' takes: state symbol state", l.number);
      State q = state_at(t.state_names, l.fields[0], l.number);
      Symbol a = symbol_at(t.input, l.fields[1], l.number);
      if (t.delta[q * t.input.size() + a] != unset) {
        throw ParseError("transition from '" + l.fields[0] + "' on '" + l.fields[1] +
                             "' defined twice",
                         l.number);
      }
      t.delta[q * t.input.size() + a] = state_at(t.state_names, l.fields[2], l.number);
    } else {
      throw ParseError("unknown keyword '" + l.keyword + ":'", l.number);
    }
  }

  // Reject partial transducers instead of completing them silently.
  for (State q = 0; q < t.num_states(); ++q) {
    if (t.labels[q] == unset_label) {
      throw ParseError("state '" + t.state_names[q] + "' has no label", 0);
    }
    for (Symbol a = 0; a < t.input.size(); ++a) {
      if (t.delta[q * t.input.size() + a] == unset) {
        throw ParseError("missing transition from '" + t.state_names[q] + "' on '" +
                             t.input.name(a) + "'",
                         0);
      }
    }
  }
  t.validate();
  return t;
}

namespace {

void write_names(std::ostream& out, const char* keyword, const std::vector<std::string>& names) {
  out << keyword << ":";
  for (const std::string& n : names) out << " " << n;
  out << "\n";
}

}  // namespace

void save_nfa(std::ostream& out, const Nfa& n) {
  write_names(out, "alphabet", n.alphabet.names());
  write_names(out, "states", n.state_names);
  out << "initial: " << n.state_names[n.initial] << "\n";
  out << "accepting:";
  for (State q = 0; q < n.num_states(); ++q) {
    if (n.accepting[q]) out << " " << n.state_names[q];
  }
  out << "\n";
  for (State q = 0; q < n.num_states(); ++q) {
    for (Symbol a = 0; a < n.alphabet.size(); ++a) {
      for (State to : n.successors(q, a)) {
        out << "trans: " << n.state_names[q] << " " << n.alphabet.name(a) << " "
            << n.state_names[to] << "\n";
      }
    }
  }
}

void save_transducer(std::ostream& out, const Transducer& t) {
  write_names(out, "input", t.input.names());
  write_names(out, "output", t.output.names());
  write_names(out, "states", t.state_names);
  out << "initial: " << t.state_names[t.initial] << "\n";
  for (State q = 0; q < t.num_states(); ++q) {
    out << "label: " << t.state_names[q] << " " << t.output.name(t.label(q)) << "\n";
  }
  for (State q = 0; q < t.num_states(); ++q) {
    for (Symbol a = 0; a < t.input.size(); ++a) {
      out << "trans: " << t.state_names[q] << " " << t.input.name(a) << " "
          << t.state_names[t.step(q, a)] << "\n";
    }
  }
}

namespace {

template <typename T, typename Fn>
T load_path(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return fn(in);
  } catch (const ParseError& e) {
    // The line prefix is already in e.what(); keep the number, add the path.
    ParseError wrapped(path + ": " + e.what(), 0);
    wrapped.line = e.line;
    throw wrapped;
  }
}

}  // namespace

Nfa load_nfa_file(const std::string& path) {
  return load_path<Nfa>(path, [](std::istream& in) { return load_nfa(in); });
}

Transducer load_transducer_file(const std::string& path) {
  return load_path<Transducer>(path, [](std::istream& in) { return load_transducer(in); });
}

void save_nfa_file(const std::string& path, const Nfa& n) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  save_nfa(out, n);
}

void save_transducer_file(const std::string& path, const Transducer& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  save_transducer(out, t);
}

}  // namespace roundsim
