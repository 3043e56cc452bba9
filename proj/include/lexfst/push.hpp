#ifndef LEXFST_PUSH_HPP
#define LEXFST_PUSH_HPP

#include "lexfst/transducer.hpp"

namespace lexfst {

// Per-state future-output greatest common prefix. prefix[q] is the gcp of
// every output word readable from q to a final state, final outputs included.
struct PrefixMap {
  std::vector<OutputString> prefix;
};

namespace detail {

// Fixpoint over the gcp semilattice. Values only shorten once defined, and
// lengths are bounded by the shortest output word from each state, so the
// iteration terminates on cyclic machines too.
template <class M>
PrefixMap future_prefixes(const M& m) {
  const size_t n = m.states.size();
  std::vector<OutputString> p(n);
  std::vector<char> defined(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t qi = n; qi-- > 0;) {
      StateId q = static_cast<StateId>(qi);
      OutputString cand;
      bool have = false;
      for (const OutputString& phi : m.states[q].finals) {
        if (!have) {
          cand = phi;
          have = true;
        } else {
          gcp_into(cand, phi);
        }
      }
      for (const Arc& a : m.states[q].arcs) {
        if (!defined[a.to]) continue;
        OutputString word = concat(a.out, p[a.to]);
        if (!have) {
          cand = std::move(word);
          have = true;
        } else {
          gcp_into(cand, word);
        }
      }
      if (have && (!defined[q] || cand != p[q])) {
        p[q] = std::move(cand);
        defined[q] = 1;
        changed = true;
      }
    }
  }
  for (StateId q = 0; q < n; ++q)
    if (!defined[q]) throw NotCoaccessible(q);
  return PrefixMap{std::move(p)};
}

// sigma2(q,a) = (P(q))^-1 sigma(q,a) P(delta(q,a)); final outputs and the
// initial output are rewritten accordingly, so the rewrite is total and
// function-preserving without assuming P(i) = eps.
template <class M>
M push_impl(const M& m) {
  PrefixMap pm = future_prefixes(m);
  M r = m;
  r.lambda = concat(m.lambda, pm.prefix[m.initial]);
  for (StateId q = 0; q < m.states.size(); ++q) {
    for (size_t i = 0; i < m.states[q].arcs.size(); ++i) {
      OutputString word =
          concat(m.states[q].arcs[i].out, pm.prefix[m.states[q].arcs[i].to]);
      // P(q) is a prefix of sigma(q,a)P(delta(q,a)) by construction.
      r.states[q].arcs[i].out = strip_prefix(pm.prefix[q], word);
    }
    for (size_t i = 0; i < m.states[q].finals.size(); ++i)
      r.states[q].finals[i] =
          strip_prefix(pm.prefix[q], m.states[q].finals[i]);
    normalize_finals(r.states[q].finals, r.osyms);
  }
  return r;
}

}  // namespace detail

PrefixMap compute_prefix_map(const Transducer& t);
PrefixMap compute_prefix_map(const NondetTransducer& t);

Transducer push_outputs(const Transducer& t);
NondetTransducer push_outputs(const NondetTransducer& t);

// True when every non-initial state has future-output gcp epsilon.
bool is_onward(const Transducer& t);

}  // namespace lexfst

#endif  // LEXFST_PUSH_HPP
