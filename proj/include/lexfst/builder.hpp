#ifndef LEXFST_BUILDER_HPP
#define LEXFST_BUILDER_HPP

#include <optional>

#include "lexfst/lexicon.hpp"
#include "lexfst/transducer.hpp"

namespace lexfst {

// Deterministic prefix-tree transducer: input paths share prefixes, all
// transition outputs are eps, each entry's output word is stored as a final
// output on the word-end state.
Transducer build_trie(const Lexicon& lex,
                      std::optional<uint32_t> p = std::nullopt);

// Whole pipeline: trie -> encode -> push -> minimize -> decode. p defaults
// to the observed ambiguity of the lexicon.
Transducer compile(const Lexicon& lex,
                   std::optional<uint32_t> p = std::nullopt);

// The classic dictionary transducer: one private path per entry, output
// written one symbol per transition (leftover on the last transition). Input
// to determinization tests and the reverse-application comparison.
NondetTransducer build_union(const Lexicon& lex);

}  // namespace lexfst

#endif  // LEXFST_BUILDER_HPP
