#pragma once

namespace aqsspm {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// evaluated by the modified Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `df` degrees of freedom (df > 0).
double student_t_cdf(double t, double df);

/// P(|T| >= |t|).
double student_t_two_sided_p(double t, double df);

/// Inverse of student_t_cdf for p in (0, 1).
double student_t_quantile(double p, double df);

/// Upper tail P(F' >= f) of the F distribution with (d1, d2) degrees of freedom.
double f_distribution_sf(double f, double d1, double d2);

}  // namespace aqsspm
