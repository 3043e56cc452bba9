#include "lexfst/push.hpp"

namespace lexfst {

PrefixMap compute_prefix_map(const Transducer& t) {
  return detail::future_prefixes(t);
}

PrefixMap compute_prefix_map(const NondetTransducer& t) {
  return detail::future_prefixes(t);
}

Transducer push_outputs(const Transducer& t) { return detail::push_impl(t); }

NondetTransducer push_outputs(const NondetTransducer& t) {
  return detail::push_impl(t);
}

bool is_onward(const Transducer& t) {
  PrefixMap pm = detail::future_prefixes(t);
  for (StateId q = 0; q < t.states.size(); ++q)
    if (q != t.initial && !pm.prefix[q].empty()) return false;
  return true;
}

}  // namespace lexfst
