#include "lexfst/psubseq.hpp"

#include <algorithm>

#include "lexfst/canonical.hpp"
#include "lexfst/minimize.hpp"

namespace lexfst {

std::string marker_name(unsigned j) { return "#" + std::to_string(j); }

bool is_marker_name(const std::string& s) {
  if (s.size() < 2 || s[0] != '#') return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Transducer encode_p(const Transducer& t) {
  uint32_t p = t.observed_ambiguity();
  Transducer r = t;
  std::vector<Symbol> markers;
  for (unsigned j = 1; j <= p; ++j) {
    std::string name = marker_name(j);
    if (r.isyms.find(name)) throw MarkerCollision(name);
    markers.push_back(r.isyms.intern(name));
  }
  StateId sink = r.add_state();
  for (StateId q = 0; q < t.states.size(); ++q) {
    if (t.states[q].finals.empty()) continue;
    auto finals = t.states[q].finals;
    normalize_finals(finals, r.osyms);
    r.states[q].finals.clear();
    for (size_t j = 0; j < finals.size(); ++j)
      r.add_transition(q, markers[j], finals[j], sink);
  }
  r.states[sink].finals.push_back(OutputString{});
  r.p_bound = 1;
  return r;
}

Transducer decode_p(const Transducer& t) {
  // Collect marker symbols present in the input alphabet.
  std::vector<Symbol> markers;
  for (unsigned j = 1;; ++j) {
    auto id = t.isyms.find(marker_name(j));
    if (!id) break;
    markers.push_back(*id);
  }
  auto is_marker = [&](Symbol s) {
    return std::find(markers.begin(), markers.end(), s) != markers.end();
  };

  // The collector: unique final state, phi = [eps], no outgoing arcs.
  StateId sink = static_cast<StateId>(-1);
  for (StateId q = 0; q < t.states.size(); ++q) {
    if (t.states[q].finals.empty()) continue;
    if (sink != static_cast<StateId>(-1))
      throw MalformedEncoding("more than one final state");
    sink = q;
  }
  if (sink == static_cast<StateId>(-1))
    throw MalformedEncoding("no final state");
  if (t.states[sink].finals != std::vector<OutputString>{{}})
    throw MalformedEncoding("final state carries a non-epsilon output");
  if (!t.states[sink].arcs.empty())
    throw MalformedEncoding("final state has outgoing transitions");

  Transducer r;
  r.isyms = t.isyms;
  r.osyms = t.osyms;
  r.initial = t.initial;
  r.lambda = t.lambda;
  r.states.clear();
  r.states.resize(t.states.size());
  size_t marker_arcs = 0;
  uint32_t p = 1;
  for (StateId q = 0; q < t.states.size(); ++q) {
    for (const Arc& a : t.states[q].arcs) {
      if (is_marker(a.in)) {
        if (a.to != sink)
          throw MalformedEncoding("marker transition does not reach the "
                                  "collector state");
        ++marker_arcs;
        r.states[q].finals.push_back(a.out);
      } else {
        if (a.to == sink)
          throw MalformedEncoding("non-marker transition enters the "
                                  "collector state");
        r.states[q].arcs.push_back(a);
      }
    }
    normalize_finals(r.states[q].finals, r.osyms);
    p = std::max<uint32_t>(p, static_cast<uint32_t>(r.states[q].finals.size()));
  }
  if (marker_arcs == 0)
    throw MalformedEncoding("no marker transitions; finals not recoverable");
  r.p_bound = p;
  // The collector is now unreachable; canonicalize drops it and the marker
  // symbols.
  return canonicalize(r);
}

Transducer minimize_p(const Transducer& t) {
  return canonicalize(decode_p(minimize_sequential(encode_p(t))));
}

}  // namespace lexfst
