#include "gonality/galois.hpp"

#include <algorithm>
#include <numeric>

#include "gonality/cyclotomic.hpp"
#include "gonality/integers.hpp"

namespace gonality {

GaloisSubgroup galois_subgroup(unsigned long s, const FieldSpec& k) {
    if (s < 1) throw Error("galois_subgroup: s must be >= 1");
    if (k.n < 1) throw Error("galois_subgroup: field index must be >= 1");
    GaloisSubgroup g;
    g.s = s;
    if (s == 1) {
        g.elements = {0};  // the trivial unit group mod 1
        return g;
    }
    const unsigned long big = std::lcm(k.n, s);
    if (big > 10000000) throw CapExceededError("galois_subgroup: lcm(n, s) above 1e7");

    std::vector<bool> seen(s, false);
    for (unsigned long u = 1; u <= big; u += k.n) {  // u == 1 mod n
        if (std::gcd(u, big) != 1) continue;
        seen[u % s] = true;
    }
    for (unsigned long r = 0; r < s; ++r)
        if (seen[r]) g.elements.push_back(r);
    g.order = g.elements.size();

    const Int expected = div_exact(euler_phi(Int(big)), euler_phi(Int(k.n)));
    if (expected != static_cast<unsigned long>(g.order))
        throw Error("galois_subgroup: order mismatch (internal)");

    unsigned long max_order = 1;
    std::vector<unsigned long> orders(g.elements.size(), 1);
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (g.elements[i] == 1) continue;
        const Int o = multiplicative_order(Int(g.elements[i]), Int(s));
        orders[i] = mpz_get_ui(o.get_mpz_t());
        max_order = std::max(max_order, orders[i]);
    }
    g.cyclic = max_order == g.order;
    if (g.cyclic && g.order > 1)
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (orders[i] == g.order) g.generators.push_back(g.elements[i]);
    return g;
}

std::vector<HypothesisViolation> check_hypotheses(const AbelianGroupSpec& a,
                                                  const FieldSpec& k) {
    std::vector<HypothesisViolation> violations;
    for (const OmegaEntry& e : a.omega) {
        if (!mpz_fits_ulong_p(e.s.get_mpz_t())) {
            violations.push_back({e.s, "prime power too large to analyze"});
            continue;
        }
        const unsigned long s = mpz_get_ui(e.s.get_mpz_t());
        const GaloisSubgroup g = galois_subgroup(s, k);
        if (!g.cyclic)
            violations.push_back(
                {e.s, "Gal(K(zeta_" + e.s.get_str() + ")/K) is not cyclic (order " +
                          std::to_string(g.order) + ")"});
    }
    return violations;
}

SelectTResult select_t(const Int& l, const FieldSpec& k, const Int& window,
                       unsigned long m_target) {
    if (l < 3 || !is_probable_prime(l)) throw Error("select_t: l must be an odd prime");
    if (window < 1) throw Error("select_t: window must be >= 1");
    if (!mpz_fits_ulong_p(l.get_mpz_t())) throw CapExceededError("select_t: l too large");
    const unsigned long lu = mpz_get_ui(l.get_mpz_t());

    const GaloisSubgroup pi = galois_subgroup(lu, k);
    if (!pi.cyclic)
        throw NotCyclicError("select_t: Gal(K(zeta_l)/K) is not cyclic for l = " + l.get_str());
    // The trivial group is generated by 1 (zeta_l already in K).
    std::vector<unsigned long> gens = pi.order == 1 ? std::vector<unsigned long>{1}
                                                    : pi.generators;

    const CyclotomicPoly phi = cyclotomic_poly(m_target);
    std::vector<TCandidate> candidates;
    for (Int t = -window; t <= window; ++t) {
        const Int r = mod_floor(t, l);
        if (!mpz_fits_ulong_p(r.get_mpz_t())) continue;
        const unsigned long ru = mpz_get_ui(r.get_mpz_t());
        if (std::find(gens.begin(), gens.end(), ru) == gens.end()) continue;
        const Int value = abs(phi.eval(t));
        if (value == 0) continue;  // zeta - t would be the zero element
        candidates.push_back({t, value});
    }
    if (candidates.empty())
        throw NoGeneratorError("select_t: no generator lift within window " + window.get_str());
    std::sort(candidates.begin(), candidates.end(), [](const TCandidate& a, const TCandidate& b) {
        const int c = cmp(a.phi_abs, b.phi_abs);
        if (c != 0) return c < 0;
        const int d = cmp(abs(a.t), abs(b.t));
        if (d != 0) return d < 0;
        return a.t > b.t;  // positive sign wins the remaining tie
    });
    return {candidates.front().t, std::move(candidates)};
}

}  // namespace gonality
