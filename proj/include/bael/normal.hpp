#pragma once

namespace bael {

// Standard normal CDF, accurate in both tails.
double normal_cdf(double x);

// Inverse of the standard normal CDF (Wichura's PPND16 rational
// approximation, relative error below 1e-15 on (0,1)).
// Throws std::invalid_argument unless 0 < p < 1.
double normal_quantile(double p);

}  // namespace bael
