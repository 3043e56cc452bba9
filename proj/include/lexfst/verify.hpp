#ifndef LEXFST_VERIFY_HPP
#define LEXFST_VERIFY_HPP

#include <optional>
#include <string>

#include "lexfst/transducer.hpp"

namespace lexfst {

struct VerifyReport {
  bool equivalent = true;
  std::string divergence_input;  // first diverging input word, if any
  size_t max_len = 0;
};

// Compares lookup over every input word up to max_len by walking both
// machines jointly over the union of their defined transitions. Throws
// AlphabetMismatch when the machines' trimmed input alphabets are disjoint
// while both accept something.
VerifyReport verify_equivalent(const Transducer& a, const Transducer& b,
                               size_t max_len);

}  // namespace lexfst

#endif  // LEXFST_VERIFY_HPP
