#include <doctest.h>

#include <lexfst/apply.hpp>
#include <lexfst/builder.hpp>
#include <lexfst/lexicon.hpp>
#include <lexfst/push.hpp>
#include <lexfst/transducer.hpp>

#include "support/gen.hpp"

#include <random>

using namespace lexfst;

namespace {

OutputString out(Transducer& t, const std::string& word) {
  OutputString o;
  for (const auto& tok : split_utf8(word)) o.push_back(t.osyms.intern(tok));
  return o;
}

OutputString oq(const Transducer& t, const std::string& word) {
  OutputString o;
  for (const auto& tok : split_utf8(word)) {
    auto s = t.osyms.find(tok);
    REQUIRE(s.has_value());
    o.push_back(*s);
  }
  return o;
}

std::vector<Symbol> iq(const Transducer& t, const std::vector<std::string>& toks) {
  std::vector<Symbol> w;
  for (const auto& tok : toks) {
    auto s = t.isyms.find(tok);
    REQUIRE(s.has_value());
    w.push_back(*s);
  }
  return w;
}

// Cyclic machine whose output timing is deliberately late: after the p arc,
// three branches all begin their outputs with "d", so matching an output
// word backwards keeps several candidates alive until pushing re-times the
// outputs. Language: p q^n r -> abc (dbc)^n dbe, plus the two decoys
// p q^n s v -> ... dbf and p q^n u v -> ... dbg.
Transducer cyclic_machine() {
  Transducer t;
  Symbol p = t.isyms.intern("p"), q = t.isyms.intern("q"), r = t.isyms.intern("r");
  Symbol s = t.isyms.intern("s"), u = t.isyms.intern("u"), v = t.isyms.intern("v");
  StateId hub = t.add_state();   // 1
  StateId fin = t.add_state();   // 2
  StateId s5 = t.add_state();    // 3
  StateId s6 = t.add_state();    // 4
  StateId s7 = t.add_state();    // 5
  StateId s8 = t.add_state();    // 6
  t.add_transition(0, p, out(t, "abc"), hub);
  t.add_transition(hub, q, out(t, "dbc"), hub);
  t.add_transition(hub, r, out(t, "dbe"), fin);
  t.add_transition(hub, s, out(t, "db"), s5);
  t.add_transition(s5, v, out(t, "f"), s6);
  t.add_transition(hub, u, out(t, "d"), s7);
  t.add_transition(s7, v, out(t, "bg"), s8);
  t.states[fin].finals.push_back({});
  t.states[s6].finals.push_back({});
  t.states[s8].finals.push_back({});
  return t;
}

}  // namespace

TEST_CASE("lookup walks the unique input path and appends final outputs") {
  Lexicon lex = testsupport::lexicon_from(
      {{"car", "KAR"}, {"cart", "KART"}, {"card", "KARD"}});
  Transducer m = compile(lex);
  CHECK(lookup(m, std::string("card")) == std::vector<std::string>{"KARD"});
  CHECK(lookup(m, std::string("ca")).empty());      // path exists, not final
  CHECK(lookup(m, std::string("cab")).empty());     // no path
  CHECK(lookup(m, std::string("zzz")).empty());     // unknown symbols
}

TEST_CASE("complete returns the pending output along a live prefix") {
  Lexicon lex = testsupport::lexicon_from(
      {{"car", "KAR"}, {"cart", "KART"}, {"card", "KARD"}});
  Transducer m = compile(lex);
  // On the pushed machine the prefix output is the gcp of all completions.
  CHECK(complete_str(m, "ca") == "KAR");
  CHECK(complete_str(m, "car") == "KAR");
  CHECK(complete_str(m, "") == "KAR");  // gcp of every output in the machine
  CHECK_THROWS_AS((void)complete_str(m, "cab"), PrefixNotPresent);
}

TEST_CASE("reverse_apply recovers inputs from an output word") {
  Lexicon lex = testsupport::lexicon_from(
      {{"car", "KAR"}, {"cart", "KART"}, {"card", "KARD"}});
  Transducer m = compile(lex);
  ReverseResult res = reverse_apply(m, oq(m, "KART"));
  REQUIRE(res.inputs.size() == 1);
  CHECK(*res.inputs.begin() == iq(m, {"c", "a", "r", "t"}));
  CHECK(reverse_apply(m, oq(m, "KA")).inputs.empty());
}

TEST_CASE("reverse_apply finds every input of a many-to-one mapping") {
  Lexicon lex = testsupport::lexicon_from(
      {{"ab", "Z"}, {"cd", "Z"}, {"ef", "Y"}});
  Transducer m = compile(lex);
  ReverseResult res = reverse_apply(m, oq(m, "Z"));
  CHECK(res.inputs.size() == 2);
  CHECK(res.inputs.count(iq(m, {"a", "b"})) == 1);
  CHECK(res.inputs.count(iq(m, {"c", "d"})) == 1);
}

TEST_CASE("pushing shrinks the active set of output-side application") {
  Transducer t = cyclic_machine();
  Transducer pushed = push_outputs(t);
  CHECK(render_output(pushed, pushed.lambda) == "abcdb");

  OutputString y = oq(t, "abcdbcdbe");
  ReverseResult before = reverse_apply(t, y);
  ReverseResult after = reverse_apply(pushed, oq(pushed, "abcdbcdbe"));
  REQUIRE(before.inputs.size() == 1);
  CHECK(*before.inputs.begin() == iq(t, {"p", "q", "r"}));
  CHECK(after.inputs == before.inputs);
  CHECK(before.max_active == 3);
  CHECK(after.max_active == 1);
}

TEST_CASE("reverse_apply follows the cycle for longer outputs") {
  Transducer t = cyclic_machine();
  Transducer pushed = push_outputs(t);
  // p q q q r -> abc dbc dbc dbc dbe
  OutputString y = oq(t, "abcdbcdbcdbcdbe");
  ReverseResult res = reverse_apply(pushed, y);
  REQUIRE(res.inputs.size() == 1);
  CHECK(*res.inputs.begin() == iq(t, {"p", "q", "q", "q", "r"}));
  CHECK(res.max_active == 1);
}

TEST_CASE("reverse_apply rejects outputs produced by no input") {
  Transducer t = cyclic_machine();
  CHECK(reverse_apply(t, oq(t, "abcdbc")).inputs.empty());   // mid-cycle stop
  CHECK(reverse_apply(t, oq(t, "dbe")).inputs.empty());      // missing prefix
  CHECK(reverse_apply(t, {}).inputs.empty());                // empty output
}

TEST_CASE("reverse_apply enforces its search budget") {
  // 2^12 distinct inputs all map to the empty output word.
  Transducer t;
  Symbol a = t.isyms.intern("a"), b = t.isyms.intern("b");
  StateId prev = 0;
  for (int i = 0; i < 12; ++i) {
    StateId nxt = t.add_state();
    t.add_transition(prev, a, {}, nxt);
    t.add_transition(prev, b, {}, nxt);
    prev = nxt;
  }
  t.states[prev].finals.push_back({});
  CHECK_THROWS_AS((void)reverse_apply(t, {}, 1000), SearchBudgetExceeded);
  CHECK(reverse_apply(t, {}, 100000).inputs.size() == 4096);
}

TEST_CASE("lookup agrees with brute-force path enumeration on random machines") {
  std::mt19937_64 rng(testsupport::kDefaultSeed + 233);
  for (int i = 0; i < 15; ++i) {
    INFO(testsupport::seed_note(testsupport::kDefaultSeed + 233, i));
    Transducer t = testsupport::random_acyclic_machine(rng);
    auto fn = testsupport::enumerate_function_by_name(t, 12);
    for (const auto& [w, outs] : fn) {
      std::vector<Symbol> u;
      for (const auto& tok : w) u.push_back(*t.isyms.find(tok));
      auto got = lookup(t, u);
      std::set<std::vector<std::string>> got_names;
      for (const auto& o : got) {
        std::vector<std::string> r;
        for (Symbol x : o) r.push_back(t.osyms.name(x));
        got_names.insert(r);
      }
      CHECK(got_names == outs);
    }
  }
}

TEST_CASE("reverse application inverts lookup on random machines") {
  std::mt19937_64 rng(testsupport::kDefaultSeed + 377);
  for (int i = 0; i < 10; ++i) {
    INFO(testsupport::seed_note(testsupport::kDefaultSeed + 377, i));
    Transducer t = testsupport::random_acyclic_machine(rng);
    auto fn = testsupport::enumerate_function_by_name(t, 12);
    for (const auto& [w, outs] : fn) {
      std::vector<Symbol> u;
      for (const auto& tok : w) u.push_back(*t.isyms.find(tok));
      for (const auto& o : outs) {
        OutputString y;
        for (const auto& tok : o) y.push_back(*t.osyms.find(tok));
        ReverseResult res = reverse_apply(t, y);
        CHECK(res.inputs.count(u) == 1);
      }
    }
  }
}
