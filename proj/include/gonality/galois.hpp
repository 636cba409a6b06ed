#pragma once

#include <string>
#include <vector>

#include "gonality/base.hpp"
#include "gonality/group_spec.hpp"

namespace gonality {

class NotCyclicError : public Error {
  public:
    using Error::Error;
};

class NoGeneratorError : public Error {
  public:
    using Error::Error;
};

class CapExceededError : public Error {
  public:
    using Error::Error;
};

/// Base field K = Q(zeta_n); n = 1 means K = Q.
struct FieldSpec {
    unsigned long n = 1;

    bool operator==(const FieldSpec&) const = default;
};

/// The subgroup Gal(K(zeta_s)/K) of the units mod s.
struct GaloisSubgroup {
    unsigned long s = 1;
    std::vector<unsigned long> elements;    // sorted residues
    unsigned long order = 1;                // m_s = [K(zeta_s) : K]
    bool cyclic = true;
    std::vector<unsigned long> generators;  // all elements of full order; empty if order 1
};

/// Computes Gal(K(zeta_s)/K) as the image mod s of the units of Z/lcm(n,s)
/// that restrict trivially to Q(zeta_n).
GaloisSubgroup galois_subgroup(unsigned long s, const FieldSpec& k);

struct HypothesisViolation {
    Int s;
    std::string reason;
};

/// Empty iff Gal(K(zeta_s)/K) is cyclic for every prime power s in omega.
std::vector<HypothesisViolation> check_hypotheses(const AbelianGroupSpec& a, const FieldSpec& k);

struct TCandidate {
    Int t;
    Int phi_abs;  // |Phi_{m_target}(t)|
};

struct SelectTResult {
    Int t;
    std::vector<TCandidate> candidates;  // sorted by (|Phi(t)|, |t|, sign)
};

/// Picks the integer t whose residue mod l generates Gal(K(zeta_l)/K),
/// minimizing |Phi_{m_target}(t)| over |t| <= window; ties prefer smaller
/// |t|, then the positive sign. A trivial Galois group is generated by 1,
/// so t == 1 mod l in that case.
SelectTResult select_t(const Int& l, const FieldSpec& k, const Int& window,
                       unsigned long m_target);

}  // namespace gonality
