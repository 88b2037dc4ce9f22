#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delsarte {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when user-supplied input violates a documented precondition.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails; indicates an engine bug
// or a falsified theorem, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long gcd_l(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_l(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_l(a, b) * b;
}

inline long to_long(const Int& v, const char* what = "value") {
    if (!v.fits_slong_p())
        throw internal_error(std::string(what) + " does not fit in a machine word: " + v.get_str());
    return v.get_si();
}

inline bool divides(const Int& a, const Int& b) {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline bool divides_l(long a, long b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

}  // namespace delsarte
