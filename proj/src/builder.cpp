#include "lexfst/builder.hpp"

#include "lexfst/psubseq.hpp"

namespace lexfst {

Transducer build_trie(const Lexicon& lex, std::optional<uint32_t> p) {
  if (lex.entries.empty()) throw EmptyLexicon();
  uint32_t ambiguity = lex.observed_ambiguity();
  if (p && ambiguity > *p) throw AmbiguityExceeded(ambiguity, *p);

  Transducer t;
  t.isyms = lex.isyms;
  t.osyms = lex.osyms;
  t.p_bound = p ? *p : ambiguity;
  for (const auto& e : lex.entries) {
    StateId q = t.initial;
    for (Symbol a : e.input) {
      const Arc* arc = t.step(q, a);
      if (arc) {
        q = arc->to;
      } else {
        StateId r = t.add_state();
        t.add_transition(q, a, {}, r);
        q = r;
      }
    }
    auto& finals = t.states[q].finals;
    if (std::find(finals.begin(), finals.end(), e.output) == finals.end())
      finals.push_back(e.output);
  }
  for (auto& st : t.states) normalize_finals(st.finals, t.osyms);
  return t;
}

Transducer compile(const Lexicon& lex, std::optional<uint32_t> p) {
  return minimize_p(build_trie(lex, p));
}

NondetTransducer build_union(const Lexicon& lex) {
  if (lex.entries.empty()) throw EmptyLexicon();
  NondetTransducer t;
  t.isyms = lex.isyms;
  t.osyms = lex.osyms;
  t.p_bound = lex.observed_ambiguity();
  for (const auto& e : lex.entries) {
    if (e.input.empty()) {
      t.states[t.initial].finals.push_back(e.output);
      continue;
    }
    StateId q = t.initial;
    for (size_t i = 0; i < e.input.size(); ++i) {
      OutputString out;
      if (i + 1 == e.input.size()) {
        // leftover output on the last transition
        if (i < e.output.size())
          out.assign(e.output.begin() + static_cast<ptrdiff_t>(i),
                     e.output.end());
      } else if (i < e.output.size()) {
        out.push_back(e.output[i]);
      }
      StateId r = t.add_state();
      t.add_transition(q, e.input[i], std::move(out), r);
      q = r;
    }
    t.states[q].finals.push_back(OutputString{});
  }
  for (auto& st : t.states) normalize_finals(st.finals, t.osyms);
  return t;
}

}  // namespace lexfst
