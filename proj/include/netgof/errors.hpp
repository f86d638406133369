#pragma once

#include <stdexcept>
#include <string>

namespace netgof {

// An off-diagonal fitted probability fell outside (eps, 1-eps): the residual
// standardization would divide by (nearly) zero.  Raised instead of clamping
// so a degenerate fit is never silently papered over.
struct DegenerateProbability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fitted null produced a residual ensemble too degenerate to standardize
// against (e.g. zero bootstrap spread).
struct DegenerateFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The maximum likelihood estimate does not exist for the observed data
// (e.g. a node of degree 0 or n-1 under the beta model).
struct MleNonexistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative fit exhausted its iteration budget, or the likelihood has no
// finite maximizer (e.g. separation in a logistic fit).
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace netgof
