#pragma once

// Extreme eigenvalues of symmetric tridiagonal matrices by Sturm-sequence
// bisection.  Cost is O(n) per bisection step with no allocation, which is
// what makes large Monte Carlo runs over tridiagonal ensembles cheap.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace netgof {

// Number of eigenvalues strictly less than x, via the LDL^T sign count.
inline int sturm_count_below(const std::vector<double>& diag,
                             const std::vector<double>& offdiag, double x) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("sturm_count_below: empty matrix");
  if (offdiag.size() + 1 != n)
    throw std::invalid_argument("sturm_count_below: offdiag must have n-1 entries");
  int count = 0;
  double d = diag[0] - x;
  if (d < 0.0) ++count;
  for (std::size_t k = 1; k < n; ++k) {
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    d = (diag[k] - x) - offdiag[k - 1] * offdiag[k - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

namespace detail {

inline std::pair<double, double> gershgorin_bounds(const std::vector<double>& diag,
                                                   const std::vector<double>& offdiag) {
  const std::size_t n = diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

// Bisect for the extreme eigenvalue.  `want_max` selects which end.  The
// caller may pass a warm bracket; it is validated by Sturm counts and
// widened to the Gershgorin interval if it does not actually bracket.
inline double tridiag_extreme(const std::vector<double>& diag,
                              const std::vector<double>& offdiag, bool want_max,
                              double tol, double warm_lo, double warm_hi) {
  const int n = static_cast<int>(diag.size());
  auto [glo, ghi] = gershgorin_bounds(diag, offdiag);
  glo -= 1.0;
  ghi += 1.0;
  double lo = std::max(warm_lo, glo);
  double hi = std::min(warm_hi, ghi);
  // Predicate P(x): all eigenvalues < x (for max) / at least one < x (for min).
  // P is monotone in x; the eigenvalue is the infimum of {x : P(x)}.
  auto pred = [&](double x) {
    const int c = sturm_count_below(diag, offdiag, x);
    return want_max ? (c == n) : (c >= 1);
  };
  if (!(lo < hi) || pred(lo) || !pred(hi)) {
    lo = glo;
    hi = ghi;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline double tridiag_lambda_max(const std::vector<double>& diag,
                                 const std::vector<double>& offdiag, double tol,
                                 double warm_lo = -std::numeric_limits<double>::infinity(),
                                 double warm_hi = std::numeric_limits<double>::infinity()) {
  return detail::tridiag_extreme(diag, offdiag, true, tol, warm_lo, warm_hi);
}

inline double tridiag_lambda_min(const std::vector<double>& diag,
                                 const std::vector<double>& offdiag, double tol,
                                 double warm_lo = -std::numeric_limits<double>::infinity(),
                                 double warm_hi = std::numeric_limits<double>::infinity()) {
  return detail::tridiag_extreme(diag, offdiag, false, tol, warm_lo, warm_hi);
}

}  // namespace netgof
