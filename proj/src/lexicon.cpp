#include "lexfst/lexicon.hpp"

#include <istream>
#include <map>
#include <set>
#include <string>

namespace lexfst {

void Lexicon::add(const std::vector<std::string>& in_toks,
                  const std::vector<std::string>& out_toks) {
  Entry e;
  for (const auto& tok : in_toks) e.input.push_back(isyms.intern(tok));
  for (const auto& tok : out_toks) e.output.push_back(osyms.intern(tok));
  for (const Entry& seen : entries)
    if (seen.input == e.input && seen.output == e.output) return;
  entries.push_back(std::move(e));
}

uint32_t Lexicon::observed_ambiguity() const {
  std::map<std::vector<Symbol>, uint32_t> mult;
  uint32_t m = 1;
  for (const Entry& e : entries) m = std::max(m, ++mult[e.input]);
  return m;
}

Lexicon read_lexicon(std::istream& in, Tokenize mode) {
  Lexicon lex;
  std::string line;
  size_t lineno = 0;
  std::set<std::pair<std::vector<Symbol>, OutputString>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    std::string in_field = tab == std::string::npos ? line : line.substr(0, tab);
    std::string out_field =
        tab == std::string::npos ? std::string() : line.substr(tab + 1);
    Lexicon::Entry e;
    for (const auto& tok : split_utf8(in_field))
      e.input.push_back(lex.isyms.intern(tok));
    auto out_toks = mode == Tokenize::Space ? split_space(out_field)
                                            : split_utf8(out_field);
    for (const auto& tok : out_toks) e.output.push_back(lex.osyms.intern(tok));
    if (seen.insert({e.input, e.output}).second)
      lex.entries.push_back(std::move(e));
  }
  return lex;
}

}  // namespace lexfst
