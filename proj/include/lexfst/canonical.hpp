#ifndef LEXFST_CANONICAL_HPP
#define LEXFST_CANONICAL_HPP

#include <string>

#include "lexfst/transducer.hpp"

namespace lexfst {

// Canonical form: symbol tables restricted to used symbols and sorted by
// name, states renumbered by BFS from the initial state with transitions
// visited in ascending input-symbol order, final-output lists sorted
// lexicographically, p normalized to the observed ambiguity. Two machines
// realize the same presentation iff their canonical texts are equal; this is
// the equality standard used throughout the test suites.
Transducer canonicalize(const Transducer& t);

std::string canonical_text(const Transducer& t);

bool canonical_equal(const Transducer& a, const Transducer& b);

}  // namespace lexfst

#endif  // LEXFST_CANONICAL_HPP
