#pragma once

#include <utility>
#include <vector>

#include "gonality/base.hpp"

namespace gonality {

class NotCoprimeError : public Error {
  public:
    using Error::Error;
};

class NotPrimeError : public Error {
  public:
    using Error::Error;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
    std::vector<std::pair<Int, unsigned long>> pairs;  // (prime, exponent)

    /// Product of prime^exponent; reconstructs the factored input.
    Int value() const;
};

enum class RootCriterion { least_positive, least_absolute };

struct PrimitiveRootResult {
    Int p;
    Int t;  // signed; t mod p has multiplicative order p-1
    RootCriterion criterion;
};

struct ScanRow {
    Int p;
    Int abs_root;    // |g(p)| under the least-absolute criterion
    bool satisfies;  // 4*g(p)^2 <= p, i.e. |g(p)| <= sqrt(p)/2
};

/// Miller-Rabin with a fixed witness set; deterministic for n < 3.3e24.
bool is_probable_prime(const Int& n);

/// Trial division up to 1e6, then Pollard rho on the remaining cofactor.
/// n = 1 yields the empty factorization.
Factorization factorize(Int n);

Int euler_phi_of(const Factorization& f);
Int euler_phi(const Int& n);

/// Least k >= 1 with a^k == 1 mod n. Throws NotCoprimeError if gcd(a,n) != 1.
Int multiplicative_order(const Int& a, const Int& n);

/// Smallest primitive root mod p under the given criterion.
/// Ties under least_absolute resolve to the positive sign.
PrimitiveRootResult least_primitive_root(const Int& p, RootCriterion criterion);

/// For every odd prime p <= limit, the least-absolute primitive root and
/// whether it clears sqrt(p)/2 (compared exactly as 4t^2 <= p).
std::vector<ScanRow> primitive_root_bound_scan(const Int& limit);

/// Moebius function.
int mobius(const Int& n);

/// All positive divisors of n, ascending.
std::vector<Int> sorted_divisors(const Int& n);

}  // namespace gonality
