#ifndef LEXFST_MINIMIZE_HPP
#define LEXFST_MINIMIZE_HPP

#include "lexfst/transducer.hpp"

namespace lexfst {

// Disjoint blocks of states; two states share a block only if they have
// identical finality and final-output lists.
struct Partition {
  std::vector<uint32_t> block_of;
  uint32_t num_blocks = 0;
};

// Moore-style iterated refinement over composite (input symbol, output
// string) labels. Coarsest partition where merged states have identical
// final-output lists and transition signatures into equal blocks.
Partition partition_refine(const Transducer& t);

// Quotient of t by a refinement-stable partition.
Transducer merge(const Transducer& t, const Partition& p);

// Stage 1 (prefix pushing) followed by stage 2 (automata minimization over
// composite labels). Result is canonical.
Transducer minimize_sequential(const Transducer& t);

// Exact on acyclic machines: true iff q and r accept the same input words
// and their output functions differ by a constant prefix on that shared
// domain. Depth-bounded; throws CyclicUnsupported when the bound is hit.
bool states_equivalent_oracle(const Transducer& t, StateId q, StateId r,
                              size_t max_depth = 64);

}  // namespace lexfst

#endif  // LEXFST_MINIMIZE_HPP
