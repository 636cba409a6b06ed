#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gonality {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Arbitrary-precision rational.
using Rat = mpq_class;

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// a mod n with result in [0, n), n > 0.
inline Int mod_floor(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Quotient of floor division.
inline Int div_floor(const Int& a, const Int& n) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return q;
}

/// Exact division; q such that q * d == a. Caller guarantees divisibility.
inline Int div_exact(const Int& a, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace gonality
