#include "lexfst/determinize.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>

namespace lexfst {

namespace {

using Pair = std::pair<StateId, OutputString>;
using Subset = std::vector<Pair>;  // sorted, unique

std::string subset_key(const Subset& s) {
  std::string key;
  for (const auto& [q, res] : s) {
    auto add = [&](uint32_t v) {
      key.append(reinterpret_cast<const char*>(&v), sizeof(v));
    };
    add(q);
    add(static_cast<uint32_t>(res.size()));
    for (Symbol x : res) add(x);
  }
  return key;
}

}  // namespace

Transducer determinize(const NondetTransducer& t,
                       const DeterminizeLimits& limits) {
  for (const auto& st : t.states)
    for (const Arc& a : st.arcs)
      if (a.in == kEpsilon) throw InputEpsilon();

  size_t max_states = limits.max_states;
  if (const char* env = std::getenv("LEXFST_MAX_STATES")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) max_states = v;
  }

  Transducer r;
  r.isyms = t.isyms;
  r.osyms = t.osyms;
  r.lambda = t.lambda;
  r.states.clear();

  std::vector<Subset> subsets;
  std::unordered_map<std::string, StateId> seen;
  auto intern_subset = [&](Subset s) -> StateId {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::string key = subset_key(s);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    if (subsets.size() >= max_states)
      throw NonSubsequential("max_states = " + std::to_string(max_states));
    StateId id = static_cast<StateId>(subsets.size());
    subsets.push_back(std::move(s));
    seen.emplace(std::move(key), id);
    r.states.emplace_back();
    return id;
  };

  r.initial = intern_subset({{t.initial, {}}});
  uint32_t discovered_p = 1;

  for (StateId cur = 0; cur < subsets.size(); ++cur) {
    const Subset subset = subsets[cur];

    // Finality: distinct residual.phi completions, at most p of them.
    std::vector<OutputString> finals;
    for (const auto& [q, res] : subset)
      for (const OutputString& phi : t.states[q].finals)
        finals.push_back(concat(res, phi));
    normalize_finals(finals, r.osyms);
    if (limits.declared_p > 0 && finals.size() > limits.declared_p)
      throw AmbiguityExceeded(static_cast<uint32_t>(finals.size()),
                              limits.declared_p);
    discovered_p =
        std::max<uint32_t>(discovered_p, static_cast<uint32_t>(finals.size()));
    r.states[cur].finals = std::move(finals);

    // Group successor pairs by input symbol.
    std::map<Symbol, std::vector<Pair>> by_sym;
    for (const auto& [q, res] : subset)
      for (const Arc& a : t.states[q].arcs)
        by_sym[a.in].push_back({a.to, concat(res, a.out)});

    for (auto& [sym, cands] : by_sym) {
      OutputString emitted = cands.front().second;
      for (const auto& [q, word] : cands) gcp_into(emitted, word);
      Subset next;
      next.reserve(cands.size());
      for (auto& [q, word] : cands) {
        OutputString res = strip_prefix(emitted, word);
        if (res.size() > limits.max_residual_len)
          throw NonSubsequential("max_residual_len = " +
                                 std::to_string(limits.max_residual_len));
        next.push_back({q, std::move(res)});
      }
      StateId target = intern_subset(std::move(next));
      r.add_transition(cur, sym, std::move(emitted), target);
    }
  }
  r.p_bound = discovered_p;
  return r;
}

}  // namespace lexfst
