#include "lexfst/canonical.hpp"

#include <map>
#include <set>

#include "lexfst/io.hpp"

namespace lexfst {

Transducer canonicalize(const Transducer& t) {
  // Used symbols, sorted by external name.
  std::set<std::string> in_names, out_names;
  auto note_out = [&](const OutputString& s) {
    for (Symbol x : s) out_names.insert(t.osyms.name(x));
  };
  note_out(t.lambda);
  for (const auto& st : t.states) {
    for (const Arc& a : st.arcs) {
      in_names.insert(t.isyms.name(a.in));
      note_out(a.out);
    }
    for (const auto& phi : st.finals) note_out(phi);
  }

  Transducer r;
  std::map<Symbol, Symbol> imap, omap;
  for (const auto& n : in_names)
    if (n != kEpsilonName) imap.emplace(*t.isyms.find(n), r.isyms.intern(n));
  for (const auto& n : out_names)
    if (n != kEpsilonName) omap.emplace(*t.osyms.find(n), r.osyms.intern(n));
  auto remap_out = [&](const OutputString& s) {
    OutputString o;
    o.reserve(s.size());
    for (Symbol x : s) o.push_back(omap.at(x));
    return o;
  };

  // BFS renumbering with arcs visited in ascending new input-symbol order.
  std::vector<StateId> order;
  std::vector<StateId> renum(t.states.size(), static_cast<StateId>(-1));
  order.push_back(t.initial);
  renum[t.initial] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    StateId q = order[head];
    std::map<Symbol, const Arc*> sorted;
    for (const Arc& a : t.states[q].arcs) sorted.emplace(imap.at(a.in), &a);
    for (const auto& [sym, arc] : sorted)
      if (renum[arc->to] == static_cast<StateId>(-1)) {
        renum[arc->to] = static_cast<StateId>(order.size());
        order.push_back(arc->to);
      }
  }

  r.lambda = remap_out(t.lambda);
  r.states.clear();
  r.states.resize(order.size());
  r.initial = 0;
  uint32_t p = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    StateId q = order[i];
    std::map<Symbol, Arc> arcs;
    for (const Arc& a : t.states[q].arcs)
      arcs.emplace(imap.at(a.in), Arc{imap.at(a.in), remap_out(a.out), renum[a.to]});
    for (auto& [sym, a] : arcs) r.states[i].arcs.push_back(std::move(a));
    for (const auto& phi : t.states[q].finals)
      r.states[i].finals.push_back(remap_out(phi));
    normalize_finals(r.states[i].finals, r.osyms);
    p = std::max<uint32_t>(p, static_cast<uint32_t>(r.states[i].finals.size()));
  }
  r.p_bound = p;
  return r;
}

std::string canonical_text(const Transducer& t) {
  return write_text(canonicalize(t));
}

bool canonical_equal(const Transducer& a, const Transducer& b) {
  return canonical_text(a) == canonical_text(b);
}

}  // namespace lexfst
