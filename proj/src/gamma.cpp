#include "thinbase/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "thinbase/natural.hpp"

namespace thinbase {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr long double kLanczos[9] = {
    0.99999999999980993L,  676.5203681218851L,     -1259.1392167224028L,
    771.32342877765313L,   -176.61502916214059L,   12.507343278686905L,
    -0.13857109526572012L, 9.9843695780195716e-6L, 1.5056327351493116e-7L};

long double gamma_ld(long double x) {
    if (x < 0.5L) {
        // reflection; not reached by stohr_lower_bound but kept for generality
        const long double pi = 3.14159265358979323846264338328L;
        return pi / (std::sin(pi * x) * gamma_ld(1.0L - x));
    }
    x -= 1.0L;
    long double a = kLanczos[0];
    const long double t = x + 7.5L;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    const long double sqrt2pi = 2.50662827463100050241576528481L;
    return sqrt2pi * std::pow(t, x + 0.5L) * std::exp(-t) * a;
}

}  // namespace

double real_gamma(double x) {
    if (!(x > 0)) throw std::invalid_argument("real_gamma requires x > 0");
    return static_cast<double>(gamma_ld(static_cast<long double>(x)));
}

double stohr_lower_bound(unsigned h) {
    if (h < 1 || h > 64) throw std::invalid_argument("stohr_lower_bound supports 1 <= h <= 64");
    // (h!)^{1/h} via logarithms; h! is exact, its log loses nothing noticeable
    const Natural fact = factorial(h);
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, fact.get_mpz_t());
    const long double log_fact =
        std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * 0.693147180559945309417232121458L;
    const long double root = std::exp(log_fact / h);
    return static_cast<double>(root / gamma_ld(1.0L + 1.0L / h));
}

}  // namespace thinbase
