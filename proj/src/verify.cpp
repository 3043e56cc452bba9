#include "lexfst/verify.hpp"

#include <map>
#include <optional>
#include <set>

namespace lexfst {

namespace {

// Outputs rendered as name sequences so machines with differently ordered
// symbol tables compare correctly.
using Rendered = std::vector<std::string>;

Rendered render(const SymbolTable& syms, const OutputString& s) {
  Rendered r;
  r.reserve(s.size());
  for (Symbol x : s) r.push_back(syms.name(x));
  return r;
}

struct Walker {
  const Transducer& a;
  const Transducer& b;
  size_t max_len;
  std::vector<std::string> word;
  std::optional<std::string> divergence;

  std::set<Rendered> finals_at(const Transducer& t, std::optional<StateId> q,
                               const Rendered& acc) {
    std::set<Rendered> outs;
    if (!q) return outs;
    for (const OutputString& phi : t.states[*q].finals) {
      Rendered full = acc;
      for (const auto& tok : render(t.osyms, phi)) full.push_back(tok);
      outs.insert(std::move(full));
    }
    return outs;
  }

  void diverge() {
    std::string w;
    for (const auto& tok : word) w += tok;
    divergence = w;
  }

  void walk(std::optional<StateId> qa, std::optional<StateId> qb, Rendered ma,
            Rendered mb, size_t depth) {
    if (divergence) return;
    if (finals_at(a, qa, ma) != finals_at(b, qb, mb)) {
      diverge();
      return;
    }
    if (depth == max_len) return;
    std::map<std::string, std::pair<const Arc*, const Arc*>> next;
    if (qa)
      for (const Arc& arc : a.states[*qa].arcs)
        next[a.isyms.name(arc.in)].first = &arc;
    if (qb)
      for (const Arc& arc : b.states[*qb].arcs)
        next[b.isyms.name(arc.in)].second = &arc;
    for (const auto& [sym, arcs] : next) {
      word.push_back(sym);
      Rendered na = ma, nb = mb;
      std::optional<StateId> ta, tb;
      if (arcs.first) {
        for (const auto& tok : render(a.osyms, arcs.first->out))
          na.push_back(tok);
        ta = arcs.first->to;
      }
      if (arcs.second) {
        for (const auto& tok : render(b.osyms, arcs.second->out))
          nb.push_back(tok);
        tb = arcs.second->to;
      }
      walk(ta, tb, std::move(na), std::move(nb), depth + 1);
      word.pop_back();
      if (divergence) return;
    }
  }
};

}  // namespace

VerifyReport verify_equivalent(const Transducer& a, const Transducer& b,
                               size_t max_len) {
  Transducer ta = trim(a);
  Transducer tb = trim(b);

  std::set<std::string> ia, ib;
  for (const auto& st : ta.states)
    for (const Arc& arc : st.arcs) ia.insert(ta.isyms.name(arc.in));
  for (const auto& st : tb.states)
    for (const Arc& arc : st.arcs) ib.insert(tb.isyms.name(arc.in));
  bool a_accepts = !ia.empty() || ta.is_final(ta.initial);
  bool b_accepts = !ib.empty() || tb.is_final(tb.initial);
  if (a_accepts && b_accepts && !ia.empty() && !ib.empty()) {
    std::vector<std::string> common;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                          std::back_inserter(common));
    if (common.empty()) throw AlphabetMismatch();
  }

  Walker w{ta, tb, max_len};
  w.walk(ta.initial, tb.initial, render(ta.osyms, ta.lambda),
         render(tb.osyms, tb.lambda), 0);
  VerifyReport r;
  r.max_len = max_len;
  if (w.divergence) {
    r.equivalent = false;
    r.divergence_input = *w.divergence;
  }
  return r;
}

}  // namespace lexfst
