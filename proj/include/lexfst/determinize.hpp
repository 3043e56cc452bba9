#ifndef LEXFST_DETERMINIZE_HPP
#define LEXFST_DETERMINIZE_HPP

#include "lexfst/transducer.hpp"

namespace lexfst {

struct DeterminizeLimits {
  size_t max_states = 1000000;
  size_t max_residual_len = 1000;
  uint32_t declared_p = 0;  // 0 = discover
};

// Subset construction with residual outputs. Subset states are sets of
// (state, residual) pairs, normalized so the gcp of the residuals is eps;
// the transition output is the gcp of residual.sigma over contributing
// pairs. Diverges on non-subsequential inputs, hence the bounded-failure
// contract: NonSubsequential when a limit is hit.
Transducer determinize(const NondetTransducer& t,
                       const DeterminizeLimits& limits = {});

}  // namespace lexfst

#endif  // LEXFST_DETERMINIZE_HPP
