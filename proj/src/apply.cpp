#include "lexfst/apply.hpp"

#include <map>
#include <set>

namespace lexfst {

std::vector<OutputString> lookup(const Transducer& t,
                                 const std::vector<Symbol>& u) {
  StateId q = t.initial;
  OutputString acc = t.lambda;
  for (Symbol a : u) {
    const Arc* arc = t.step(q, a);
    if (!arc) return {};
    acc = concat(acc, arc->out);
    q = arc->to;
  }
  std::vector<OutputString> outs;
  for (const OutputString& phi : t.states[q].finals)
    outs.push_back(concat(acc, phi));
  return outs;
}

std::vector<std::string> lookup(const Transducer& t, const std::string& word) {
  std::vector<Symbol> u;
  for (const auto& tok : split_utf8(word)) {
    auto id = t.isyms.find(tok);
    if (!id) return {};
    u.push_back(*id);
  }
  std::vector<std::string> out;
  for (const OutputString& o : lookup(t, u)) out.push_back(render_output(t, o));
  return out;
}

OutputString complete(const Transducer& t, const std::vector<Symbol>& u) {
  StateId q = t.initial;
  OutputString acc = t.lambda;
  for (Symbol a : u) {
    const Arc* arc = t.step(q, a);
    if (!arc) throw PrefixNotPresent(t.isyms.name(a));
    acc = concat(acc, arc->out);
    q = arc->to;
  }
  return acc;
}

std::string complete_str(const Transducer& t, const std::string& prefix) {
  std::vector<Symbol> u;
  for (const auto& tok : split_utf8(prefix)) {
    auto id = t.isyms.find(tok);
    if (!id) throw PrefixNotPresent(prefix);
    u.push_back(*id);
  }
  return render_output(t, complete(t, u));
}

std::string render_output(const Transducer& t, const OutputString& s,
                          const std::string& sep) {
  std::string r;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) r += sep;
    r += t.osyms.name(s[i]);
  }
  return r;
}

namespace detail {

// Output-side traversal. Configurations are (state, consumed-position)
// pairs; a round expands every frontier configuration through
// epsilon-output transitions and then through one output-consuming
// transition whose label matches y at the current position. The active-set
// trace counts the deduplicated configurations entered per round, the way
// the sets of states are counted during right-input recognition.
template <class M>
ReverseResult reverse_apply_impl(const M& m, const OutputString& y,
                                 size_t budget) {
  using Config = std::pair<StateId, uint32_t>;
  ReverseResult result;

  if (!is_prefix(m.lambda, y)) {
    // lambda itself already diverges from y; nothing is active.
    result.max_active = 0;
    return result;
  }

  struct Edge {
    Config from;
    std::vector<Symbol> word;  // input symbols consumed along the hop
  };
  std::map<Config, std::vector<Edge>> parents;
  std::set<Config> visited;
  size_t steps = 0;

  Config start{m.initial, static_cast<uint32_t>(m.lambda.size())};
  std::vector<Config> frontier{start};
  visited.insert(start);
  result.max_active = 1;

  while (!frontier.empty()) {
    // Epsilon-output closure of the frontier, with parent links.
    std::vector<Config> closure = frontier;
    std::set<Config> in_closure(frontier.begin(), frontier.end());
    for (size_t head = 0; head < closure.size(); ++head) {
      Config c = closure[head];
      for (const Arc& a : m.states[c.first].arcs) {
        if (!a.out.empty()) continue;
        if (++steps > budget) throw SearchBudgetExceeded();
        Config n{a.to, c.second};
        parents[n].push_back({c, {a.in}});
        if (in_closure.insert(n).second) {
          closure.push_back(n);
          visited.insert(n);  // fully expanded within this round
        }
      }
    }

    // One output-consuming transition per configuration; labels are
    // matched atomically against y.
    std::set<Config> next;
    for (const Config& c : closure) {
      uint32_t pos = c.second;
      for (const Arc& a : m.states[c.first].arcs) {
        if (a.out.empty()) continue;
        if (++steps > budget) throw SearchBudgetExceeded();
        if (pos + a.out.size() > y.size()) continue;
        if (!std::equal(a.out.begin(), a.out.end(), y.begin() + pos)) continue;
        Config n{a.to, pos + static_cast<uint32_t>(a.out.size())};
        parents[n].push_back({c, {a.in}});
        next.insert(n);
      }
    }
    result.max_active = std::max(result.max_active, next.size());
    frontier.clear();
    for (const Config& c : next)
      if (visited.insert(c).second) frontier.push_back(c);
  }

  // Accepting configurations: a final output completes y exactly.
  std::vector<Config> accepting;
  for (const Config& c : visited)
    for (const OutputString& phi : m.states[c.first].finals)
      if (c.second + phi.size() == y.size() &&
          std::equal(phi.begin(), phi.end(), y.begin() + c.second)) {
        accepting.push_back(c);
        break;
      }

  // Enumerate input words backward through the parent links.
  std::vector<Symbol> suffix;  // reversed
  std::set<Config> on_path;
  auto emit = [&](auto&& self, const Config& c) -> void {
    if (++steps > budget) throw SearchBudgetExceeded();
    if (c == start) {
      result.inputs.emplace(suffix.rbegin(), suffix.rend());
      return;
    }
    if (!on_path.insert(c).second) return;  // epsilon cycle
    auto it = parents.find(c);
    if (it != parents.end())
      for (const Edge& e : it->second) {
        for (auto w = e.word.rbegin(); w != e.word.rend(); ++w)
          suffix.push_back(*w);
        self(self, e.from);
        suffix.resize(suffix.size() - e.word.size());
      }
    on_path.erase(c);
  };
  for (const Config& c : accepting) emit(emit, c);
  return result;
}

}  // namespace detail

ReverseResult reverse_apply(const Transducer& t, const OutputString& y,
                            size_t budget) {
  return detail::reverse_apply_impl(t, y, budget);
}

ReverseResult reverse_apply(const NondetTransducer& t, const OutputString& y,
                            size_t budget) {
  return detail::reverse_apply_impl(t, y, budget);
}

}  // namespace lexfst
