#pragma once

namespace thinbase {

/// Gamma function for real x > 0 (Lanczos approximation, g = 7, 9 terms).
/// Accurate to well over 10 significant digits on the range used here.
double real_gamma(double x);

/// (h!)^{1/h} / Gamma(1 + 1/h), the lower bound on limsup A(x)/x^{1/h}
/// over all bases of order h. Valid for 1 <= h <= 64.
double stohr_lower_bound(unsigned h);

}  // namespace thinbase
