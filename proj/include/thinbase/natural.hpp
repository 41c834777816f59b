#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace thinbase {

/// Arbitrary-precision nonnegative integer. Operations in this library keep
/// values nonnegative; boundaries that accept external input must call
/// parse_natural() or check_natural().
using Natural = mpz_class;

/// Exact rational, used for ratios, thresholds and the embedding grid.
using Rational = mpq_class;

inline Natural nat_pow(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Natural pow2(unsigned long exp) { return nat_pow(Natural(2), exp); }

inline Natural factorial(unsigned long n) {
    Natural r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Natural gcd(const Natural& a, const Natural& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;  // canonical since base is
}

inline std::optional<std::uint64_t> to_u64(const Natural& n) {
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return std::nullopt;
    std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_size(n.get_mpz_t()) > 64 / (8 * sizeof(mp_limb_t))) {
        // 32-bit limbs: assemble from two limbs
        Natural hi = n >> 32;
        lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
             (mpz_get_ui(n.get_mpz_t()) & 0xffffffffull);
    }
    return lo;
}

/// Largest w with g^w <= x; requires x >= 1, g >= 2.
inline unsigned long floor_log(const Natural& x, unsigned g) {
    if (x < 1) throw std::invalid_argument("floor_log: x must be >= 1");
    unsigned long w = 0;
    Natural p = g;
    while (p <= x) {
        ++w;
        p *= g;
    }
    return w;
}

inline void check_natural(const Natural& n, const char* what) {
    if (sgn(n) < 0) throw std::invalid_argument(std::string(what) + ": negative value");
}

/// Parses a decimal nonnegative integer; rejects signs, blanks and garbage.
inline Natural parse_natural(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : text)
        if (c < '0' || c > '9') throw std::invalid_argument("invalid integer literal: " + text);
    return Natural(text, 10);
}

/// Parses "n" or "n/d" with d > 0.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_natural(text));
    Natural num = parse_natural(text.substr(0, slash));
    Natural den = parse_natural(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Raised when a construction's theorem hypotheses fail on the given inputs.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised on malformed sequence/bitmap files.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace thinbase
