#ifndef LEXFST_LEXICON_HPP
#define LEXFST_LEXICON_HPP

#include <iosfwd>
#include <vector>

#include "lexfst/symbols.hpp"

namespace lexfst {

enum class Tokenize { Chars, Space };

// Ordered multiset of (input word, output word) pairs. Duplicate inputs with
// distinct outputs express ambiguity; exact duplicate pairs are dropped.
struct Lexicon {
  struct Entry {
    std::vector<Symbol> input;
    OutputString output;
  };

  SymbolTable isyms;
  SymbolTable osyms;
  std::vector<Entry> entries;

  uint32_t observed_ambiguity() const;
  void add(const std::vector<std::string>& in_toks,
           const std::vector<std::string>& out_toks);
};

// One `input<TAB>output` pair per line. Inputs are tokenized per code point;
// outputs per code point or on whitespace depending on `mode`.
Lexicon read_lexicon(std::istream& in, Tokenize mode = Tokenize::Chars);

}  // namespace lexfst

#endif  // LEXFST_LEXICON_HPP
