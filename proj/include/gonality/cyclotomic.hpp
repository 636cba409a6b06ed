#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gonality/base.hpp"
#include "gonality/lattice.hpp"

namespace gonality {

class ModulusMismatchError : public Error {
  public:
    using Error::Error;
};

class ZeroIdealError : public Error {
  public:
    using Error::Error;
};

class NotContainedError : public Error {
  public:
    using Error::Error;
};

/// The m-th cyclotomic polynomial, exact integer coefficients low-to-high,
/// monic of degree phi(m).
struct CyclotomicPoly {
    unsigned long m = 1;
    std::vector<Int> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    Int eval(const Int& t) const;
};

CyclotomicPoly cyclotomic_poly(unsigned long m);

unsigned long phi_ul(unsigned long m);

/// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
struct CyclotomicElement {
    unsigned long m = 1;
    std::vector<Int> coeffs;  // length phi(m)

    static CyclotomicElement zero(unsigned long m);
    static CyclotomicElement constant(unsigned long m, const Int& c);
    /// zeta_m - t. For m <= 2 this is the integer (+-1 - t).
    static CyclotomicElement zeta_minus(unsigned long m, const Int& t);

    bool is_zero() const;
    /// Negate so the first nonzero coordinate is positive (norm-preserving).
    CyclotomicElement normalized_sign() const;

    bool operator==(const CyclotomicElement&) const = default;
};

CyclotomicElement mul(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement add(const CyclotomicElement& a, const CyclotomicElement& b);

/// |N(a)| for the absolute field norm of Q(zeta_m)/Q; equals the absolute
/// resultant of Phi_m and the representing polynomial. Zero only for a = 0.
Int norm(const CyclotomicElement& a);

/// Nonzero ideal of Z[zeta_m] as a full-rank HNF lattice in the power basis.
/// Construct only through ideal_from_generators / ideal_mul / ideal_pow;
/// every constructor checks full rank and stability under multiplication
/// by zeta_m.
struct CyclotomicIdeal {
    unsigned long m = 1;
    Lattice lattice;

    bool operator==(const CyclotomicIdeal&) const = default;
};

CyclotomicIdeal ideal_from_generators(const std::vector<CyclotomicElement>& gens);
Int ideal_norm(const CyclotomicIdeal& i);
Int ideal_index(const CyclotomicIdeal& inner, const CyclotomicIdeal& outer);
CyclotomicIdeal ideal_mul(const CyclotomicIdeal& a, const CyclotomicIdeal& b);
CyclotomicIdeal ideal_pow(const CyclotomicIdeal& a, unsigned long n);
bool ideal_contains(const CyclotomicIdeal& i, const CyclotomicElement& a);

/// Conductor of Q(zeta_m): m unless m == 2 mod 4, in which case m/2.
unsigned long conductor(unsigned long m);

/// Minimum of q^f(q) over primes q <= prime_limit, where f(q) is the residue
/// degree of q in Q(zeta_m). This is a valid lower bound for the index of any
/// ideal properly contained in a prime-norm ideal: the scan stops early once
/// no larger prime can improve the minimum, and if the cap binds first the
/// result is clamped to prime_limit + 1 so the bound stays valid.
/// Returns 1 exactly when m <= 2.
Int min_cofactor_norm(unsigned long m, const Int& prime_limit = 100000);

/// Result of a bounded enumeration over an ideal's reduced basis.
///
/// best_index is the smallest |N(alpha)| / N(ideal) over the elements the
/// search actually evaluated (plus any seed); the witness, when present,
/// attains it. certified means the value is provably minimal: either a
/// generator was found (index 1) or the proper-sub-ideal lower bound from
/// min_cofactor_norm was met. Absence of a witness is never a proof of
/// non-principality.
struct SearchOutcome {
    Int best_index;
    std::optional<CyclotomicElement> witness;
    bool certified = false;
    Int lower_bound;
    std::uint64_t nodes_visited = 0;
};

class BudgetExhaustedError : public Error {
  public:
    BudgetExhaustedError(const std::string& msg, SearchOutcome partial_outcome)
        : Error(msg), partial(std::move(partial_outcome)) {}
    SearchOutcome partial;
};

/// Looks for a generator: alpha in i with |N(alpha)| = N(i). On success the
/// witness is the proof and certified = true. On failure the outcome has no
/// witness, certified = false, and best_index falls back to the index of the
/// always-present constant element N(i).
SearchOutcome principality_search(const CyclotomicIdeal& i, unsigned long radius,
                                  std::uint64_t budget);

/// Minimizes |N(alpha)| / N(i) over the coefficient box [-radius, radius] of
/// the reduced basis. An optional seed element of i joins the candidate set,
/// so the reported minimum never exceeds the seed's index.
SearchOutcome min_principal_index(const CyclotomicIdeal& i, unsigned long radius,
                                  std::uint64_t budget,
                                  const std::optional<CyclotomicElement>& seed = std::nullopt);

/// Gram matrix of the power basis under <a,b> = sum over complex embeddings
/// of a * conj(b); entries are Tr(zeta^(i-j)), exact integers.
IntMatrix trace_gram(unsigned long m);

/// Exact-rational LLL (delta = 3/4) of the given row basis under the
/// quadratic form gram. Returns the reduced rows; deterministic.
IntMatrix lll_reduce(const IntMatrix& basis, const IntMatrix& gram);

}  // namespace gonality
