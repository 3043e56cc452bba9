#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lexfst/apply.hpp"
#include "lexfst/builder.hpp"
#include "lexfst/canonical.hpp"
#include "lexfst/determinize.hpp"
#include "lexfst/io.hpp"
#include "lexfst/minimize.hpp"
#include "lexfst/psubseq.hpp"
#include "lexfst/push.hpp"
#include "lexfst/verify.hpp"

namespace {

using namespace lexfst;

std::optional<OutputString> parse_output_query(const Transducer& t,
                                               const std::string& s) {
  std::vector<std::string> toks;
  if (s.find('|') != std::string::npos) {
    size_t start = 0;
    for (;;) {
      size_t bar = s.find('|', start);
      toks.push_back(s.substr(start, bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  } else {
    toks = split_utf8(s);
  }
  OutputString y;
  for (const auto& tok : toks) {
    auto id = t.osyms.find(tok);
    if (!id) return std::nullopt;  // unknown symbol: no input maps to it
    y.push_back(*id);
  }
  return y;
}

void run_batch(std::istream& in, const std::function<void(const std::string&)>& f) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    f(line);
  }
}

void do_lookup(const Transducer& t, const std::string& word) {
  auto outs = lookup(t, word);
  std::cout << word;
  for (const auto& o : outs) std::cout << '\t' << o;
  std::cout << "\n";
}

void do_complete(const Transducer& t, bool onward, const std::string& prefix) {
  std::cout << prefix << '\t';
  try {
    std::cout << complete_str(t, prefix);
  } catch (const PrefixNotPresent&) {
    std::cout << "<no-path>";
  }
  if (!onward) std::cout << "\tnon-canonical";
  std::cout << "\n";
}

void do_invert(const Transducer& t, bool trace, const std::string& query) {
  auto y = parse_output_query(t, query);
  ReverseResult r = y ? reverse_apply(t, *y) : ReverseResult{};
  std::cout << query;
  for (const auto& u : r.inputs) {
    std::cout << '\t';
    for (Symbol a : u) std::cout << t.isyms.name(a);
  }
  if (trace) std::cout << "\ttrace=" << r.max_active;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexfst: build, push, minimize and apply subsequential "
               "transducers"};
  app.require_subcommand(1);

  // compile
  std::string lex_path, out_path, in_path, a_path, b_path;
  unsigned p_flag = 0;
  std::string tokenize = "chars";
  bool show_stats = false;
  auto* compile_cmd =
      app.add_subcommand("compile", "compile a lexicon into a minimal "
                                    "p-subsequential transducer");
  compile_cmd->add_option("lexicon", lex_path)->required();
  compile_cmd->add_option("-o,--output", out_path)->required();
  compile_cmd->add_option("--p", p_flag, "declared maximum ambiguity");
  compile_cmd->add_option("--tokenize", tokenize)
      ->check(CLI::IsMember({"chars", "space"}));
  compile_cmd->add_flag("--stats", show_stats);

  // push
  bool emit_prefix_map = false;
  auto* push_cmd = app.add_subcommand("push", "push output prefixes toward "
                                              "the initial state");
  push_cmd->add_option("input", in_path)->required();
  push_cmd->add_option("-o,--output", out_path)->required();
  push_cmd->add_flag("--emit-prefix-map", emit_prefix_map);

  // minimize
  bool p_subseq = false;
  auto* min_cmd = app.add_subcommand("minimize", "minimize a sequential or "
                                                 "p-subsequential transducer");
  min_cmd->add_option("input", in_path)->required();
  min_cmd->add_option("-o,--output", out_path)->required();
  min_cmd->add_flag("--p-subsequential", p_subseq);
  min_cmd->add_flag("--stats", show_stats);

  // determinize
  size_t max_states = 1000000, max_residual = 1000;
  auto* det_cmd = app.add_subcommand("determinize", "determinize a "
                                                    "nondeterministic transducer");
  det_cmd->add_option("input", in_path)->required();
  det_cmd->add_option("-o,--output", out_path)->required();
  det_cmd->add_option("--max-states", max_states);
  det_cmd->add_option("--max-residual", max_residual);

  // queries
  std::string query;
  bool trace = false;
  auto* lookup_cmd = app.add_subcommand("lookup", "apply to an input word");
  lookup_cmd->add_option("fst", in_path)->required();
  lookup_cmd->add_option("word", query);
  auto* complete_cmd =
      app.add_subcommand("complete", "longest determined output for a prefix");
  complete_cmd->add_option("fst", in_path)->required();
  complete_cmd->add_option("prefix", query);
  auto* invert_cmd =
      app.add_subcommand("invert", "find input words producing an output");
  invert_cmd->add_option("fst", in_path)->required();
  invert_cmd->add_option("output-string", query);
  invert_cmd->add_flag("--trace", trace);

  auto* stats_cmd = app.add_subcommand("stats", "report transducer statistics");
  stats_cmd->add_option("fst", in_path)->required();

  size_t max_len = 8;
  auto* verify_cmd =
      app.add_subcommand("verify", "compare two machines on all inputs up to "
                                   "a length bound");
  verify_cmd->add_option("fst_a", a_path)->required();
  verify_cmd->add_option("fst_b", b_path)->required();
  verify_cmd->add_option("--max-len", max_len);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compile_cmd) {
      std::ifstream in(lex_path);
      if (!in) throw Error("cannot open " + lex_path);
      Lexicon lex = read_lexicon(
          in, tokenize == "space" ? Tokenize::Space : Tokenize::Chars);
      auto start = std::chrono::steady_clock::now();
      Transducer t = compile(
          lex, p_flag ? std::optional<uint32_t>(p_flag) : std::nullopt);
      auto elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      save_transducer(t, out_path);
      if (show_stats) {
        StatsReport r = stats(t);
        std::cout << "Entries         " << lex.entries.size() << "\n"
                  << "Max. ambg       " << lex.observed_ambiguity() << "\n"
                  << "States          " << r.states << "\n"
                  << "Transitions     " << r.transitions << "\n"
                  << "Alphabet        " << r.output_alphabet << "\n"
                  << "Time spent      " << elapsed << " s\n";
        print_stats(r, std::cout);
      }
    } else if (*push_cmd) {
      Transducer t = trim(load_transducer(in_path));
      if (emit_prefix_map) {
        PrefixMap pm = compute_prefix_map(t);
        for (StateId q = 0; q < t.states.size(); ++q)
          std::cout << q << '\t'
                    << (pm.prefix[q].empty() ? std::string(kEpsilonName)
                                             : render_output(t, pm.prefix[q]))
                    << "\n";
      }
      save_transducer(push_outputs(t), out_path);
    } else if (*min_cmd) {
      Transducer t = load_transducer(in_path);
      StatsReport before = stats(t);
      Transducer m = p_subseq ? minimize_p(t) : minimize_sequential(t);
      save_transducer(m, out_path);
      if (show_stats) {
        StatsReport after = stats(m);
        std::cout << "States          " << before.states << " -> "
                  << after.states << "\n"
                  << "Transitions     " << before.transitions << " -> "
                  << after.transitions << "\n";
      }
    } else if (*det_cmd) {
      NondetTransducer n = load_nondet(in_path);
      DeterminizeLimits limits;
      limits.max_states = max_states;
      limits.max_residual_len = max_residual;
      save_transducer(determinize(n, limits), out_path);
    } else if (*lookup_cmd) {
      Transducer t = load_transducer(in_path);
      if (lookup_cmd->count("word"))
        do_lookup(t, query);
      else
        run_batch(std::cin, [&](const std::string& w) { do_lookup(t, w); });
    } else if (*complete_cmd) {
      Transducer t = load_transducer(in_path);
      bool onward = is_onward(trim(t));
      if (complete_cmd->count("prefix"))
        do_complete(t, onward, query);
      else
        run_batch(std::cin,
                  [&](const std::string& w) { do_complete(t, onward, w); });
    } else if (*invert_cmd) {
      Transducer t = load_transducer(in_path);
      if (invert_cmd->count("output-string"))
        do_invert(t, trace, query);
      else
        run_batch(std::cin,
                  [&](const std::string& w) { do_invert(t, trace, w); });
    } else if (*stats_cmd) {
      print_stats(stats(load_transducer(in_path)), std::cout);
    } else if (*verify_cmd) {
      Transducer a = load_transducer(a_path);
      Transducer b = load_transducer(b_path);
      VerifyReport r = verify_equivalent(a, b, max_len);
      if (r.equivalent) {
        std::cout << "equivalent up to length " << r.max_len << "\n";
      } else {
        std::cout << "divergence at input '" << r.divergence_input << "'\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "lexfst: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
