#ifndef LEXFST_TRANSDUCER_HPP
#define LEXFST_TRANSDUCER_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "lexfst/errors.hpp"
#include "lexfst/symbols.hpp"

namespace lexfst {

struct Arc {
  Symbol in = kEpsilon;
  OutputString out;
  StateId to = 0;

  bool operator==(const Arc& o) const = default;
};

// Sequential transducer: at most one transition per (state, input symbol).
// Final states carry an ordered list of final output strings (p-subsequential
// when some list has more than one element). `lambda` is the output emitted
// before any input symbol is read.
class Transducer {
public:
  struct State {
    std::vector<Arc> arcs;  // sorted by input symbol id, unique
    std::vector<OutputString> finals;
  };

  SymbolTable isyms;
  SymbolTable osyms;
  StateId initial = 0;
  OutputString lambda;
  uint32_t p_bound = 1;
  std::vector<State> states;

  Transducer() { states.emplace_back(); }

  StateId add_state() {
    states.emplace_back();
    return static_cast<StateId>(states.size() - 1);
  }

  void check_state(StateId q) const {
    if (q >= states.size()) throw UnknownState(q);
  }

  void add_transition(StateId q, Symbol a, OutputString out, StateId r) {
    check_state(q);
    check_state(r);
    auto& arcs = states[q].arcs;
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a,
                               [](const Arc& x, Symbol s) { return x.in < s; });
    if (it != arcs.end() && it->in == a) throw DuplicateInput(q, isyms.name(a));
    arcs.insert(it, Arc{a, std::move(out), r});
  }

  const Arc* step(StateId q, Symbol a) const {
    check_state(q);
    const auto& arcs = states[q].arcs;
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a,
                               [](const Arc& x, Symbol s) { return x.in < s; });
    if (it == arcs.end() || it->in != a) return nullptr;
    return &*it;
  }

  bool is_final(StateId q) const { return !states[q].finals.empty(); }

  size_t num_arcs() const {
    size_t n = 0;
    for (const auto& s : states) n += s.arcs.size();
    return n;
  }

  uint32_t observed_ambiguity() const {
    size_t m = 1;
    for (const auto& s : states) m = std::max(m, s.finals.size());
    return static_cast<uint32_t>(m);
  }
};

// Nondeterministic variant: multiple transitions per (state, input symbol)
// are allowed, including duplicates. Input to determinization.
class NondetTransducer {
public:
  struct State {
    std::vector<Arc> arcs;
    std::vector<OutputString> finals;
  };

  SymbolTable isyms;
  SymbolTable osyms;
  StateId initial = 0;
  OutputString lambda;
  uint32_t p_bound = 1;
  std::vector<State> states;

  NondetTransducer() { states.emplace_back(); }

  StateId add_state() {
    states.emplace_back();
    return static_cast<StateId>(states.size() - 1);
  }

  void check_state(StateId q) const {
    if (q >= states.size()) throw UnknownState(q);
  }

  void add_transition(StateId q, Symbol a, OutputString out, StateId r) {
    check_state(q);
    check_state(r);
    states[q].arcs.push_back(Arc{a, std::move(out), r});
  }

  bool is_final(StateId q) const { return !states[q].finals.empty(); }

  size_t num_arcs() const {
    size_t n = 0;
    for (const auto& s : states) n += s.arcs.size();
    return n;
  }

  static NondetTransducer from(const Transducer& t) {
    NondetTransducer n;
    n.isyms = t.isyms;
    n.osyms = t.osyms;
    n.initial = t.initial;
    n.lambda = t.lambda;
    n.p_bound = t.p_bound;
    n.states.clear();
    for (const auto& s : t.states) n.states.push_back({s.arcs, s.finals});
    return n;
  }

  // Fails with DuplicateInput if some (state, symbol) has two transitions.
  Transducer to_sequential() const;
};

// ---- output-string helpers --------------------------------------------------

inline OutputString concat(const OutputString& a, const OutputString& b) {
  OutputString r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Shortens `acc` to its greatest common prefix with `s`.
inline void gcp_into(OutputString& acc, const OutputString& s) {
  size_t k = 0;
  while (k < acc.size() && k < s.size() && acc[k] == s[k]) ++k;
  acc.resize(k);
}

inline bool is_prefix(const OutputString& pre, const OutputString& s) {
  return pre.size() <= s.size() && std::equal(pre.begin(), pre.end(), s.begin());
}

// (pre)^-1 s; `pre` must be a prefix of `s`.
inline OutputString strip_prefix(const OutputString& pre, const OutputString& s) {
  return OutputString(s.begin() + static_cast<ptrdiff_t>(pre.size()), s.end());
}

// Name-based lexicographic comparison, stable across machines whose symbol
// tables intern the same names in different orders.
inline bool less_by_name(const OutputString& a, const OutputString& b,
                         const SymbolTable& syms) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](Symbol x, Symbol y) { return syms.name(x) < syms.name(y); });
}

inline void normalize_finals(std::vector<OutputString>& finals,
                             const SymbolTable& osyms) {
  std::sort(finals.begin(), finals.end(),
            [&](const OutputString& a, const OutputString& b) {
              return less_by_name(a, b, osyms);
            });
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
}

// ---- trim -------------------------------------------------------------------

namespace detail {

template <class M>
std::vector<char> accessible(const M& m) {
  std::vector<char> seen(m.states.size(), 0);
  std::deque<StateId> queue{m.initial};
  seen[m.initial] = 1;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const Arc& a : m.states[q].arcs)
      if (!seen[a.to]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
  }
  return seen;
}

template <class M>
std::vector<char> coaccessible(const M& m) {
  std::vector<std::vector<StateId>> rev(m.states.size());
  for (StateId q = 0; q < m.states.size(); ++q)
    for (const Arc& a : m.states[q].arcs) rev[a.to].push_back(q);
  std::vector<char> seen(m.states.size(), 0);
  std::deque<StateId> queue;
  for (StateId q = 0; q < m.states.size(); ++q)
    if (m.is_final(q)) {
      seen[q] = 1;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : rev[q])
      if (!seen[p]) {
        seen[p] = 1;
        queue.push_back(p);
      }
  }
  return seen;
}

}  // namespace detail

// Keeps exactly the states both accessible from the initial state and
// co-accessible to some final state. If the language is empty the result is
// a single non-final initial state (or EmptyLanguage when requested).
template <class M>
M trim(const M& m, bool error_on_empty = false) {
  auto acc = detail::accessible(m);
  auto coacc = detail::coaccessible(m);
  std::vector<StateId> remap(m.states.size(), static_cast<StateId>(-1));
  M r;
  r.isyms = m.isyms;
  r.osyms = m.osyms;
  r.lambda = m.lambda;
  r.p_bound = m.p_bound;
  r.states.clear();
  for (StateId q = 0; q < m.states.size(); ++q)
    if (acc[q] && coacc[q]) {
      remap[q] = static_cast<StateId>(r.states.size());
      r.states.emplace_back();
    }
  if (remap[m.initial] == static_cast<StateId>(-1)) {
    if (error_on_empty) throw EmptyLanguage();
    r.states.clear();
    r.states.emplace_back();
    r.initial = 0;
    return r;
  }
  r.initial = remap[m.initial];
  for (StateId q = 0; q < m.states.size(); ++q) {
    if (remap[q] == static_cast<StateId>(-1)) continue;
    auto& dst = r.states[remap[q]];
    dst.finals = m.states[q].finals;
    for (const Arc& a : m.states[q].arcs)
      if (remap[a.to] != static_cast<StateId>(-1))
        dst.arcs.push_back(Arc{a.in, a.out, remap[a.to]});
  }
  return r;
}

}  // namespace lexfst

#endif  // LEXFST_TRANSDUCER_HPP
