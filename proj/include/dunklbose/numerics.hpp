#ifndef DUNKLBOSE_NUMERICS_HPP
#define DUNKLBOSE_NUMERICS_HPP

#include <functional>
#include <span>

namespace dunklbose::numerics {

struct QuadratureResult {
  double value;
  double abs_error;
  int intervals;
};

// Globally adaptive Gauss-Kronrod 15(7) quadrature on [a, b]. The worst
// interval (by local error estimate) is bisected until the summed estimate
// drops below abs_tol. Throws NumericalError when the interval budget is
// exhausted first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_intervals = 30000);

// Sum_{k>=0} (-1)^k a(k) for a totally monotone sequence a, by the
// Chebyshev-polynomial acceleration of Cohen, Rodriguez Villegas and
// Zagier. Converges like (3 + sqrt(8))^{-n}.
double alternating_sum(const std::function<double(int)>& a, int n = 64);

// Deterministic pairwise reduction; summation order does not depend on
// how the terms were produced.
double pairwise_sum(std::span<const double> terms);

// Brent's method on a bracketing interval: f(lo) and f(hi) must have
// opposite signs (or one of them may be zero).
double brent_root(const std::function<double(double)>& f, double lo,
                  double hi, double x_tol = 0.0, int max_iter = 200);

}  // namespace dunklbose::numerics

#endif  // DUNKLBOSE_NUMERICS_HPP
