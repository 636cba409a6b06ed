#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gonality/cyclotomic.hpp"
#include "gonality/galois.hpp"
#include "gonality/group_spec.hpp"

namespace gonality {

class HypothesisViolationError : public Error {
  public:
    HypothesisViolationError(const std::string& msg, std::vector<HypothesisViolation> v)
        : Error(msg), violations(std::move(v)) {}
    std::vector<HypothesisViolation> violations;
};

class NormCheckFailedError : public Error {
  public:
    using Error::Error;
};

class MissingClassNumberError : public Error {
  public:
    using Error::Error;
};

enum class PrincipalVerdict { yes, no_within_bound };

/// Per-summand obstruction data for one prime power s = l^u.
struct SummandReport {
    Int s;
    Int l;
    unsigned long u = 1;
    unsigned long m_s = 1;             // [K(zeta_s) : K]
    std::optional<Int> t;              // generator lift; absent for trivial summands
    std::optional<CyclotomicIdeal> frak_a;
    bool norm_check = false;           // N(frak_a) == l
    Int candidate_index = 1;           // |Phi_{m_s}(t)| / l
    std::optional<SearchOutcome> search;
    unsigned long n_s = 1;             // multiplicity in omega
    PrincipalVerdict principal = PrincipalVerdict::yes;
    std::optional<bool> power_principal;  // for frak_a^{n_s} when n_s > 1
    std::optional<Int> conditional_lower;
    std::string tag;                   // why a summand is trivial, caveats
    bool budget_exhausted = false;
};

enum class Rationality { rational_by_criterion, unknown };

struct FormulaEntry {
    std::string name;
    std::string value;   // exact rational, integer, or decimal string
    std::string caveat;
};

struct GonalityReport {
    AbelianGroupSpec group;
    FieldSpec field;
    unsigned long radius = 2;
    std::uint64_t budget = 0;
    std::vector<SummandReport> summands;  // distinct odd prime powers, ascending
    Int product_bound = 1;
    Int factorial_bound = 1;   // (|A| - 1)!
    Int reported_bound = 1;
    Rationality rationality = Rationality::unknown;
    std::vector<FormulaEntry> formulas;
    bool budget_exhausted = false;
    std::vector<std::string> notes;
};

using ClassNumberTable = std::map<unsigned long, Int>;

/// Constructs the obstruction ideal (zeta_{m_s} - t, l) for an odd prime
/// power s with nontrivial Galois data, and checks its norm is l. The
/// returned report is filled through norm_check and candidate_index.
SummandReport build_obstruction_ideal(const Int& s, const FieldSpec& k);

/// Full per-summand pipeline: ideal, candidate index, minimal-index search,
/// principality verdict, power principality, conditional lower bound.
SummandReport summand_bound(const Int& s, const FieldSpec& k, unsigned long radius,
                            std::uint64_t budget, unsigned long multiplicity = 1);

/// Assembles the product bound over the odd elementary divisors, the
/// (|A|-1)! fallback, the rationality verdict, and the formula evaluations.
GonalityReport gonality_upper_bound(const AbelianGroupSpec& a, const FieldSpec& k,
                                    unsigned long radius, std::uint64_t budget,
                                    const std::optional<ClassNumberTable>& class_numbers =
                                        std::nullopt);

/// Evaluates the closed-form bound expressions per summand: the asymptotic
/// index exponent, the effective square-root bound, the class-number bound
/// (when a table is supplied), and the l-group product exponent.
std::vector<FormulaEntry> evaluate_formulas(const AbelianGroupSpec& a, const FieldSpec& k,
                                            const std::optional<ClassNumberTable>& class_numbers =
                                                std::nullopt);

struct FischerResult {
    Lattice exponent_basis;  // rank |A| kernel of the character map
    Int index;               // equals |A|
};

/// Kernel of the map from the free abelian group on the diagonal basis onto
/// the character group: exponent vectors of free generators of the invariant
/// field when enough roots of unity are present.
FischerResult fischer_generators(const AbelianGroupSpec& a, unsigned long cap = 64);

/// m_s + 1 for odd primes s with nontrivial even-order cyclic Galois data;
/// conditional on hypotheses that are not machine-checkable here.
std::optional<Int> conditional_lower_bound(const Int& s, const FieldSpec& k);

}  // namespace gonality
