#include "lexfst/minimize.hpp"

#include <map>
#include <string>
#include <unordered_map>

#include "lexfst/canonical.hpp"
#include "lexfst/push.hpp"

namespace lexfst {

namespace {

void append_u32(std::string& key, uint32_t v) {
  key.append(reinterpret_cast<const char*>(&v), sizeof(v));
}

void append_out(std::string& key, const OutputString& s) {
  append_u32(key, static_cast<uint32_t>(s.size()));
  for (Symbol x : s) append_u32(key, x);
}

}  // namespace

Partition partition_refine(const Transducer& t) {
  const size_t n = t.states.size();
  Partition p;
  p.block_of.assign(n, 0);

  // Initial partition keyed on finality and final-output lists.
  {
    std::unordered_map<std::string, uint32_t> key_to_block;
    for (StateId q = 0; q < n; ++q) {
      std::string key;
      auto finals = t.states[q].finals;
      normalize_finals(finals, t.osyms);
      for (const auto& phi : finals) append_out(key, phi);
      auto [it, fresh] =
          key_to_block.emplace(key, static_cast<uint32_t>(key_to_block.size()));
      p.block_of[q] = it->second;
    }
    p.num_blocks = static_cast<uint32_t>(key_to_block.size());
  }

  for (;;) {
    std::unordered_map<std::string, uint32_t> key_to_block;
    std::vector<uint32_t> next(n);
    for (StateId q = 0; q < n; ++q) {
      std::string key;
      append_u32(key, p.block_of[q]);
      for (const Arc& a : t.states[q].arcs) {
        append_u32(key, a.in);
        append_out(key, a.out);
        append_u32(key, p.block_of[a.to]);
      }
      auto [it, fresh] =
          key_to_block.emplace(key, static_cast<uint32_t>(key_to_block.size()));
      next[q] = it->second;
    }
    if (key_to_block.size() == p.num_blocks) break;
    p.block_of = std::move(next);
    p.num_blocks = static_cast<uint32_t>(key_to_block.size());
  }
  return p;
}

Transducer merge(const Transducer& t, const Partition& p) {
  Transducer r;
  r.isyms = t.isyms;
  r.osyms = t.osyms;
  r.lambda = t.lambda;
  r.p_bound = t.p_bound;
  r.states.clear();
  r.states.resize(p.num_blocks);
  r.initial = p.block_of[t.initial];
  std::vector<char> done(p.num_blocks, 0);
  for (StateId q = 0; q < t.states.size(); ++q) {
    uint32_t b = p.block_of[q];
    if (done[b]) continue;
    done[b] = 1;
    r.states[b].finals = t.states[q].finals;
    normalize_finals(r.states[b].finals, r.osyms);
    for (const Arc& a : t.states[q].arcs)
      r.states[b].arcs.push_back(Arc{a.in, a.out, p.block_of[a.to]});
  }
  return r;
}

Transducer minimize_sequential(const Transducer& t) {
  Transducer s = trim(t);
  bool any_final = false;
  for (const auto& st : s.states) any_final |= !st.finals.empty();
  if (!any_final) return canonicalize(s);  // empty language
  s = push_outputs(s);
  Partition p = partition_refine(s);
  return canonicalize(merge(s, p));
}

namespace {

// word -> set of full outputs (path output plus each final output).
using Behavior = std::map<std::vector<Symbol>, std::vector<OutputString>>;

void collect_behavior(const Transducer& t, StateId q, size_t depth,
                      std::vector<Symbol>& word, const OutputString& acc,
                      Behavior& out) {
  for (const OutputString& phi : t.states[q].finals) {
    auto& v = out[word];
    OutputString full = concat(acc, phi);
    if (std::find(v.begin(), v.end(), full) == v.end()) v.push_back(full);
  }
  if (!t.states[q].arcs.empty() && depth == 0) throw CyclicUnsupported();
  for (const Arc& a : t.states[q].arcs) {
    word.push_back(a.in);
    collect_behavior(t, a.to, depth - 1, word, concat(acc, a.out), out);
    word.pop_back();
  }
}

}  // namespace

bool states_equivalent_oracle(const Transducer& t, StateId q, StateId r,
                              size_t max_depth) {
  Behavior bq, br;
  std::vector<Symbol> word;
  collect_behavior(t, q, max_depth, word, {}, bq);
  collect_behavior(t, r, max_depth, word, {}, br);

  // Equal residual input languages.
  if (bq.size() != br.size()) return false;
  // Strip each side's global output gcp, then require identical behaviors:
  // "differ by the same prefix" for every word leading to a final state.
  auto strip_all = [](Behavior& b) {
    OutputString g;
    bool have = false;
    for (auto& [w, outs] : b)
      for (auto& o : outs) {
        if (!have) {
          g = o;
          have = true;
        } else {
          gcp_into(g, o);
        }
      }
    for (auto& [w, outs] : b) {
      for (auto& o : outs) o = strip_prefix(g, o);
      std::sort(outs.begin(), outs.end());
    }
  };
  strip_all(bq);
  strip_all(br);
  return bq == br;
}

}  // namespace lexfst
