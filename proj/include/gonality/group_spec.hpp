#pragma once

#include <vector>

#include "gonality/base.hpp"

namespace gonality {

/// One prime power s = l^u of the elementary-divisor multiset, with its
/// multiplicity.
struct OmegaEntry {
    Int s;
    Int l;
    unsigned long u = 1;
    unsigned long multiplicity = 1;

    bool operator==(const OmegaEntry&) const = default;
};

/// Finite abelian group given by its invariant factors, with the derived
/// elementary-divisor multiset.
struct AbelianGroupSpec {
    std::vector<Int> invariant_factors;
    std::vector<OmegaEntry> omega;  // ascending s, multiplicities folded
    Int order = 1;
};

/// Derives the elementary-divisor multiset from a list of factors >= 2.
AbelianGroupSpec elementary_divisors(const std::vector<Int>& factors);

/// The odd part of omega: every power of 2 removed.
std::vector<OmegaEntry> omega_prime(const AbelianGroupSpec& a);

}  // namespace gonality
