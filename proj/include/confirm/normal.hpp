#pragma once

// Standard normal CDF and quantile. The quantile uses the Wichura AS241
// rational approximation (relative error below 1e-15 across the open unit
// interval), which comfortably meets the 1e-9 accuracy the rest of the
// toolkit assumes.

namespace confirm {

// P(Z <= x) for Z ~ N(0,1). Accepts +/-infinity.
double norm_cdf(double x);

// Inverse of norm_cdf on (0, 1). Throws std::invalid_argument outside (0,1).
double norm_quantile(double p);

// z such that P(-z <= Z <= z) = 1 - alpha, i.e. norm_quantile(1 - alpha/2).
double two_sided_z(double alpha);

}  // namespace confirm
