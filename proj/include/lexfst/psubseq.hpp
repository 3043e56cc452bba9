#ifndef LEXFST_PSUBSEQ_HPP
#define LEXFST_PSUBSEQ_HPP

#include "lexfst/transducer.hpp"

namespace lexfst {

// Replaces the p final functions by transitions on fresh end-marker input
// symbols #1..#p leading to a single new final state, making a
// p-subsequential machine plainly sequential. Final-output lists are sorted
// before marker assignment so equal functions encode to isomorphic machines.
Transducer encode_p(const Transducer& t);

// Inverse of encode_p: folds marker transitions back into final-output
// lists and removes the collector state.
Transducer decode_p(const Transducer& t);

// decode_p(minimize_sequential(encode_p(t))): the minimal machine realizing
// the same p-subsequential function.
Transducer minimize_p(const Transducer& t);

std::string marker_name(unsigned j);
bool is_marker_name(const std::string& s);

}  // namespace lexfst

#endif  // LEXFST_PSUBSEQ_HPP
