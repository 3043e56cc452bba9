#ifndef LEXFST_APPLY_HPP
#define LEXFST_APPLY_HPP

#include <set>
#include <string>
#include <vector>

#include "lexfst/transducer.hpp"

namespace lexfst {

// All outputs for input word u: lambda + path outputs + each final output.
// Empty set means rejection.
std::vector<OutputString> lookup(const Transducer& t,
                                 const std::vector<Symbol>& u);
std::vector<std::string> lookup(const Transducer& t, const std::string& word);

// lambda + accumulated outputs along u's path, for u labeling any path from
// the initial state (u need not be in the domain). On onward machines this
// is the gcp of the outputs of all domain words extending u.
OutputString complete(const Transducer& t, const std::vector<Symbol>& u);
std::string complete_str(const Transducer& t, const std::string& prefix);

struct ReverseResult {
  std::set<std::vector<Symbol>> inputs;
  size_t max_active = 0;  // peak simultaneous (state, output-position) pairs
};

// Output-side application: finds every input word whose output equals y by
// nondeterministic traversal matching y against concatenated output labels.
// Arc labels are matched atomically; the active set per step holds the
// (state, position) pairs entered by output-consuming transitions, matching
// the way the active state sets are counted during right-input recognition.
ReverseResult reverse_apply(const Transducer& t, const OutputString& y,
                            size_t budget = 1000000);
ReverseResult reverse_apply(const NondetTransducer& t, const OutputString& y,
                            size_t budget = 1000000);

std::string render_output(const Transducer& t, const OutputString& s,
                          const std::string& sep = "");

}  // namespace lexfst

#endif  // LEXFST_APPLY_HPP
