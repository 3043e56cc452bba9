#ifndef LEXFST_TESTS_SUPPORT_GEN_HPP
#define LEXFST_TESTS_SUPPORT_GEN_HPP

// Test-only helpers: seeded random generators and brute-force oracles kept
// independent of the library's push/minimize/determinize implementation
// paths they are used to check.

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexfst/builder.hpp"
#include "lexfst/lexicon.hpp"
#include "lexfst/transducer.hpp"

namespace testsupport {

using namespace lexfst;

inline constexpr uint64_t kDefaultSeed = 1994;

// ---- lexicon generation -----------------------------------------------------

struct LexiconParams {
  size_t max_entries = 50;
  size_t max_input_len = 8;
  size_t input_alphabet = 4;
  size_t max_output_len = 6;
  size_t output_alphabet = 5;
  double ambiguity_rate = 0.15;  // chance an entry reuses a previous input
};

inline Lexicon random_lexicon(std::mt19937_64& rng,
                              const LexiconParams& p = {}) {
  Lexicon lex;
  std::vector<std::string> in_syms, out_syms;
  for (size_t i = 0; i < p.input_alphabet; ++i)
    in_syms.push_back(std::string(1, static_cast<char>('a' + i)));
  for (size_t i = 0; i < p.output_alphabet; ++i)
    out_syms.push_back(std::string(1, static_cast<char>('A' + i)));

  size_t n = 1 + rng() % p.max_entries;
  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> seen;
  std::vector<std::vector<std::string>> inputs;
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::string> in;
    bool reuse_input = !inputs.empty() &&
        std::uniform_real_distribution<>(0, 1)(rng) < p.ambiguity_rate;
    if (reuse_input) {
      in = inputs[rng() % inputs.size()];
    } else {
      size_t len = 1 + rng() % p.max_input_len;
      for (size_t k = 0; k < len; ++k) in.push_back(in_syms[rng() % in_syms.size()]);
      // A fresh input that collides with an earlier one would introduce
      // ambiguity the caller did not ask for.
      if (std::find(inputs.begin(), inputs.end(), in) != inputs.end()) continue;
    }
    std::vector<std::string> out;
    size_t olen = rng() % (p.max_output_len + 1);
    for (size_t k = 0; k < olen; ++k)
      out.push_back(out_syms[rng() % out_syms.size()]);
    if (!seen.insert({in, out}).second) continue;
    inputs.push_back(in);
    lex.add(in, out);
  }
  return lex;
}

inline Lexicon lexicon_from(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Lexicon lex;
  for (const auto& [in, out] : pairs) lex.add(split_utf8(in), split_utf8(out));
  return lex;
}

// ---- random acyclic sequential machines -------------------------------------

// States are topologically ordered so the machine is acyclic by
// construction; regenerated until trimming leaves at least two states.
inline Transducer random_acyclic_machine(std::mt19937_64& rng,
                                         size_t max_states = 12) {
  for (;;) {
    Transducer t;
    size_t n = 2 + rng() % (max_states - 1);
    std::vector<Symbol> in_syms, out_syms;
    for (char c : {'a', 'b', 'c'}) in_syms.push_back(t.isyms.intern(std::string(1, c)));
    for (char c : {'x', 'y', 'z'}) out_syms.push_back(t.osyms.intern(std::string(1, c)));
    for (size_t q = 1; q < n; ++q) t.add_state();
    for (size_t q = 0; q + 1 < n; ++q) {
      size_t narcs = 1 + rng() % 2;
      for (size_t k = 0; k < narcs; ++k) {
        Symbol a = in_syms[rng() % in_syms.size()];
        StateId to = static_cast<StateId>(q + 1 + rng() % (n - q - 1));
        OutputString out;
        size_t olen = rng() % 3;
        for (size_t j = 0; j < olen; ++j)
          out.push_back(out_syms[rng() % out_syms.size()]);
        try {
          t.add_transition(static_cast<StateId>(q), a, out, to);
        } catch (const DuplicateInput&) {
        }
      }
    }
    for (size_t q = 1; q < n; ++q)
      if (rng() % 3 == 0 || q == n - 1) {
        OutputString phi;
        size_t olen = rng() % 3;
        for (size_t j = 0; j < olen; ++j)
          phi.push_back(out_syms[rng() % out_syms.size()]);
        t.states[q].finals.push_back(phi);
        normalize_finals(t.states[q].finals, t.osyms);
      }
    Transducer trimmed = trim(t);
    if (trimmed.states.size() >= 2) return trimmed;
  }
}

// ---- brute-force oracles ----------------------------------------------------

// All (input word, output) pairs of a machine, enumerated by path traversal.
// Independent of lookup(): walks arcs directly.
inline std::map<std::vector<Symbol>, std::set<OutputString>> enumerate_function(
    const Transducer& t, size_t max_len) {
  std::map<std::vector<Symbol>, std::set<OutputString>> fn;
  std::vector<Symbol> word;
  auto rec = [&](auto&& self, StateId q, OutputString acc) -> void {
    for (const OutputString& phi : t.states[q].finals)
      fn[word].insert(concat(acc, phi));
    if (word.size() == max_len) return;
    for (const Arc& a : t.states[q].arcs) {
      word.push_back(a.in);
      self(self, a.to, concat(acc, a.out));
      word.pop_back();
    }
  };
  rec(rec, t.initial, t.lambda);
  return fn;
}

// Same, keyed by external symbol names so machines with different tables
// compare directly.
inline std::map<std::vector<std::string>, std::set<std::vector<std::string>>>
enumerate_function_by_name(const Transducer& t, size_t max_len) {
  std::map<std::vector<std::string>, std::set<std::vector<std::string>>> fn;
  for (const auto& [word, outs] : enumerate_function(t, max_len)) {
    std::vector<std::string> w;
    for (Symbol a : word) w.push_back(t.isyms.name(a));
    for (const OutputString& o : outs) {
      std::vector<std::string> r;
      for (Symbol x : o) r.push_back(t.osyms.name(x));
      fn[w].insert(r);
    }
  }
  return fn;
}

// gcp of a set of strings, computed the obvious way.
inline std::vector<std::string> gcp_oracle(
    const std::set<std::vector<std::string>>& words) {
  std::vector<std::string> g;
  bool first = true;
  for (const auto& w : words) {
    if (first) {
      g = w;
      first = false;
      continue;
    }
    size_t k = 0;
    while (k < g.size() && k < w.size() && g[k] == w[k]) ++k;
    g.resize(k);
  }
  return g;
}

inline std::string seed_note(uint64_t seed) {
  std::ostringstream os;
  os << "seed=" << seed;
  return os.str();
}

inline std::string seed_note(uint64_t seed, int iteration) {
  std::ostringstream os;
  os << "seed=" << seed << " iteration=" << iteration;
  return os.str();
}

}  // namespace testsupport

#endif  // LEXFST_TESTS_SUPPORT_GEN_HPP
