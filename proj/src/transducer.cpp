#include "lexfst/transducer.hpp"

namespace lexfst {

Transducer NondetTransducer::to_sequential() const {
  Transducer t;
  t.isyms = isyms;
  t.osyms = osyms;
  t.initial = initial;
  t.lambda = lambda;
  t.p_bound = p_bound;
  t.states.clear();
  t.states.resize(states.size());
  for (StateId q = 0; q < states.size(); ++q) {
    t.states[q].finals = states[q].finals;
    for (const Arc& a : states[q].arcs) {
      if (a.in == kEpsilon) throw InputEpsilon();
      t.add_transition(q, a.in, a.out, a.to);
    }
  }
  return t;
}

}  // namespace lexfst
