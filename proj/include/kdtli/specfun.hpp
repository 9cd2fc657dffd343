#ifndef KDTLI_SPECFUN_HPP
#define KDTLI_SPECFUN_HPP

namespace kdtli::specfun {

// Series summation control; defaults suit double precision.
struct SeriesConfig {
  int max_terms = 60;
  double abs_tol = 1e-15;
};

// Bessel function of the first kind, integer order n >= 0, |x| <= 1e4.
// Power series below |x| = 10, normalized backward recurrence above.
double bessel_j(int n, double x, const SeriesConfig& cfg = {});

// The two evaluation routes behind bessel_j, exposed for cross-checks.
double bessel_j_series(int n, double x, const SeriesConfig& cfg = {});
double bessel_j_recurrence(int n, double x);

// Modified Bessel function of the first kind, integer order n >= 0, 0 <= x <= 50.
double bessel_i(int n, double x, const SeriesConfig& cfg = {});

// exp(-x) * I_n(x); stable for arbitrarily large x >= 0.
double bessel_i_scaled(int n, double x);

// Entire continuation of J2 through negative arguments of the square:
//   h(u) = sum_{k>=0} (-1)^k u^(k+1) / (4^(k+1) k! (k+2)!)
//        = J2(sqrt(u))   for u >= 0
//        = -I2(sqrt(-u)) for u < 0.
// Domain |u| <= 2500.
double h_entire(double u);

// h(u)/u with the removable singularity; h_entire_over_u(0) = 1/8.
double h_entire_over_u(double u);

// sin(y)/y with the removable singularity; sinc_pi(0) = 1.
double sinc_pi(double y);

}  // namespace kdtli::specfun

#endif
