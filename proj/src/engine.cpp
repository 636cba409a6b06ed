#include "gonality/engine.hpp"

#include <algorithm>

#include "gonality/integers.hpp"

namespace gonality {

namespace {

struct PrimePower {
    Int l;
    unsigned long u;
};

PrimePower split_prime_power(const Int& s) {
    const Factorization f = factorize(s);
    if (f.pairs.size() != 1) throw Error("summand: s = " + s.get_str() + " is not a prime power");
    return {f.pairs[0].first, f.pairs[0].second};
}

unsigned long to_ulong(const Int& v, const char* what) {
    if (!mpz_fits_ulong_p(v.get_mpz_t()))
        throw CapExceededError(std::string(what) + " too large: " + v.get_str());
    return mpz_get_ui(v.get_mpz_t());
}

SummandReport trivial_summand(const Int& s, const PrimePower& pp, unsigned long m_s,
                              unsigned long multiplicity, std::string tag) {
    SummandReport r;
    r.s = s;
    r.l = pp.l;
    r.u = pp.u;
    r.m_s = m_s;
    r.norm_check = true;
    r.candidate_index = 1;
    r.n_s = multiplicity;
    r.principal = PrincipalVerdict::yes;
    r.tag = std::move(tag);
    return r;
}

}  // namespace

std::optional<Int> conditional_lower_bound(const Int& s, const FieldSpec& k) {
    if (s < 3 || s % 2 == 0 || !is_probable_prime(s)) return std::nullopt;
    const GaloisSubgroup pi = galois_subgroup(to_ulong(s, "s"), k);
    if (!pi.cyclic || pi.order <= 1) return std::nullopt;
    if (pi.order % 2 != 0) return std::nullopt;  // needs even m_s (zeta_s in K is the trivial case)
    return Int(pi.order) + 1;
}

SummandReport build_obstruction_ideal(const Int& s, const FieldSpec& k) {
    const PrimePower pp = split_prime_power(s);
    if (pp.l == 2) throw Error("build_obstruction_ideal: s must be an odd prime power");
    const unsigned long su = to_ulong(s, "s");
    const GaloisSubgroup pi = galois_subgroup(su, k);
    if (!pi.cyclic)
        throw HypothesisViolationError("Gal(K(zeta_s)/K) is not cyclic for s = " + s.get_str(),
                                       {{s, "not cyclic"}});
    if (pi.order < 2)
        throw Error("build_obstruction_ideal: zeta_s lies in K, the summand is trivial");

    SummandReport r;
    r.s = s;
    r.l = pp.l;
    r.u = pp.u;
    r.m_s = pi.order;

    const SelectTResult sel = select_t(pp.l, k, pp.l, r.m_s);
    r.t = sel.t;
    const CyclotomicElement gen_l = CyclotomicElement::constant(r.m_s, pp.l);
    const CyclotomicElement gen_zt = CyclotomicElement::zeta_minus(r.m_s, sel.t);
    r.frak_a = ideal_from_generators({gen_l, gen_zt});
    const Int nrm = ideal_norm(*r.frak_a);
    if (nrm != pp.l)
        throw NormCheckFailedError("obstruction ideal for s = " + s.get_str() + " has norm " +
                                   nrm.get_str() + ", expected " + pp.l.get_str());
    r.norm_check = true;

    const Int phi_t = abs(cyclotomic_poly(r.m_s).eval(sel.t));
    if (phi_t % pp.l != 0)
        throw NormCheckFailedError("Phi_{m_s}(t) is not divisible by l for s = " + s.get_str());
    r.candidate_index = div_exact(phi_t, pp.l);
    return r;
}

SummandReport summand_bound(const Int& s, const FieldSpec& k, unsigned long radius,
                            std::uint64_t budget, unsigned long multiplicity) {
    const PrimePower pp = split_prime_power(s);
    if (pp.l == 2) throw Error("summand_bound: s must be an odd prime power");
    const GaloisSubgroup pi = galois_subgroup(to_ulong(s, "s"), k);
    if (!pi.cyclic)
        throw HypothesisViolationError("Gal(K(zeta_s)/K) is not cyclic for s = " + s.get_str(),
                                       {{s, "not cyclic"}});

    SummandReport r;
    if (pi.order == 1) {
        r = trivial_summand(s, pp, 1, multiplicity,
                            "zeta_s lies in K; the summand contributes factor 1");
    } else {
        r = build_obstruction_ideal(s, k);
        r.n_s = multiplicity;
        if (r.m_s == 2)
            r.tag = "m_s = 2: the ideal lives in Z, where every ideal is principal";
        try {
            const CyclotomicElement seed = CyclotomicElement::zeta_minus(r.m_s, *r.t);
            r.search = min_principal_index(*r.frak_a, radius, budget, seed);
        } catch (const BudgetExhaustedError& e) {
            r.search = e.partial;
            r.budget_exhausted = true;
        }
        r.principal = r.search->best_index == 1 ? PrincipalVerdict::yes
                                                : PrincipalVerdict::no_within_bound;
        if (r.principal == PrincipalVerdict::no_within_bound && r.tag.empty())
            r.tag = "no generator found within the search bounds; "
                    "this does not prove non-principality";
        if (multiplicity > 1) {
            if (r.principal == PrincipalVerdict::yes) {
                r.power_principal = true;  // a power of a principal ideal
            } else {
                try {
                    const SearchOutcome pow_search =
                        principality_search(ideal_pow(*r.frak_a, multiplicity), radius, budget);
                    r.power_principal = pow_search.best_index == 1;
                } catch (const BudgetExhaustedError&) {
                    r.power_principal = false;
                    r.budget_exhausted = true;
                }
            }
        }
    }
    r.conditional_lower = conditional_lower_bound(s, k);
    return r;
}

namespace {

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

// Fixed-precision decimal rendering of an mpf value, 20 significant digits.
std::string decimal_str(const mpf_class& v) {
    mp_exp_t exp10 = 0;
    std::string digits = v.get_str(exp10, 10, 20);
    if (digits.empty() || digits == "0") return "0";
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits = digits.substr(1);
    }
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(exp10 - 1);
}

}  // namespace

std::vector<FormulaEntry> evaluate_formulas(const AbelianGroupSpec& a, const FieldSpec& k,
                                            const std::optional<ClassNumberTable>& class_numbers) {
    std::vector<FormulaEntry> out;
    const auto odd = omega_prime(a);

    for (const OmegaEntry& e : odd) {
        const std::string s_str = e.s.get_str();
        const Int phi_s = euler_phi(e.s);
        const Int phi_phi_s = euler_phi(phi_s);
        const unsigned long ppu = to_ulong(phi_phi_s, "phi(phi(s))");

        out.push_back({"min_index_asymptotic_exponent(s=" + s_str + ")",
                       rat_str(Rat(phi_phi_s - 4, 4)),
                       "exponent of l in the asymptotic bound O(l^x) on the minimal "
                       "principal-ideal index; derived over K = Q"});

        mpf_class base(0, 256);
        mpf_sqrt_ui(base.get_mpf_t(), mpz_get_ui(e.l.get_mpz_t()));
        base = base / 2 + 1;
        mpf_class eff(0, 256);
        mpf_pow_ui(eff.get_mpf_t(), base.get_mpf_t(), ppu);
        eff /= mpf_class(e.l.get_str(), 256);
        out.push_back({"min_index_effective_bound(s=" + s_str + ")", decimal_str(eff),
                       "(1/l)(sqrt(l)/2 + 1)^phi(phi(s)), 20 significant digits; the "
                       "square-root primitive-root bound it rests on is guaranteed only "
                       "for log2(l-1) >= 24"});

        if (class_numbers) {
            const GaloisSubgroup pi = galois_subgroup(to_ulong(e.s, "s"), k);
            const auto it = class_numbers->find(pi.order);
            if (it == class_numbers->end())
                throw MissingClassNumberError("no class number supplied for n = " +
                                              std::to_string(pi.order));
            if (it->second < 1) throw Error("class numbers must be >= 1");
            const Int bound = int_pow(e.l, to_ulong(it->second - 1, "h - 1"));
            out.push_back({"min_index_class_bound(s=" + s_str + ")", bound.get_str(),
                           "l^(h-1) with h the supplied class number of Q(zeta_" +
                               std::to_string(pi.order) + "); caller-provided data"});
        }
    }

    // Product exponent for l-groups: (1/4) sum v_i (l^(u_i - 2) (l-1) phi(l-1) - 4).
    const bool l_group =
        !a.omega.empty() && std::all_of(a.omega.begin(), a.omega.end(), [&](const OmegaEntry& e) {
            return e.l == a.omega.front().l;
        });
    if (l_group && a.omega.front().l != 2) {
        const Int l = a.omega.front().l;
        const Rat lr(l);
        const Int phi_lm1 = euler_phi(l - 1);
        Rat sum(0);
        for (const OmegaEntry& e : a.omega) {
            Rat power(1);
            if (e.u >= 2) {
                power = Rat(int_pow(l, e.u - 2));
            } else {
                power = Rat(1) / lr;  // literal l^(u-2) with u = 1
            }
            sum += Rat(static_cast<unsigned long>(e.multiplicity)) *
                   (power * Rat(l - 1) * Rat(phi_lm1) - 4);
        }
        out.push_back({"product_exponent", rat_str(sum / 4),
                       "C with bound O(l^C) for the full product over the l-group; uses "
                       "phi(phi(l^u)) = l^(u-2)(l-1)phi(l-1), exact for u >= 2"});
    }
    return out;
}

GonalityReport gonality_upper_bound(const AbelianGroupSpec& a, const FieldSpec& k,
                                    unsigned long radius, std::uint64_t budget,
                                    const std::optional<ClassNumberTable>& class_numbers) {
    const auto violations = check_hypotheses(a, k);
    if (!violations.empty())
        throw HypothesisViolationError("cyclicity hypothesis fails", violations);
    if (a.order > 1000000)
        throw CapExceededError("group order above 1e6: the factorial fallback is not evaluated");

    GonalityReport rep;
    rep.group = a;
    rep.field = k;
    rep.radius = radius;
    rep.budget = budget;

    bool all_principal = true;
    for (const OmegaEntry& e : omega_prime(a)) {
        SummandReport sr = summand_bound(e.s, k, radius, budget, e.multiplicity);
        rep.budget_exhausted = rep.budget_exhausted || sr.budget_exhausted;
        const Int factor = sr.search ? sr.search->best_index : Int(1);
        for (unsigned long copy = 0; copy < e.multiplicity; ++copy) rep.product_bound *= factor;
        const bool s_ok = sr.principal == PrincipalVerdict::yes ||
                          (sr.power_principal.has_value() && *sr.power_principal);
        all_principal = all_principal && s_ok;
        rep.summands.push_back(std::move(sr));
    }
    mpz_fac_ui(rep.factorial_bound.get_mpz_t(), to_ulong(a.order - 1, "order - 1"));
    rep.reported_bound = std::min(rep.product_bound, rep.factorial_bound);
    rep.rationality = all_principal ? Rationality::rational_by_criterion : Rationality::unknown;
    rep.formulas = evaluate_formulas(a, k, class_numbers);

    rep.notes.push_back(
        "product_bound multiplies each summand's best principal-ideal index, counting "
        "repeated prime powers once per copy");
    rep.notes.push_back(
        "a summand reported no_within_bound only documents that the bounded search found "
        "no generator; it is not a proof of non-principality");
    for (const SummandReport& sr : rep.summands)
        if (sr.conditional_lower)
            rep.notes.push_back(
                "conditional lower bound " + sr.conditional_lower->get_str() + " for s = " +
                sr.s.get_str() +
                " assumes the monomial-unit hypothesis, which is not machine-checked here");
    for (const SummandReport& sr : rep.summands)
        if (sr.search && sr.search->lower_bound > 1 && sr.search->lower_bound < sr.l) {
            rep.notes.push_back(
                "search lower bounds use residue degrees modulo the conductor; primes "
                "ramified there (e.g. norm " + sr.search->lower_bound.get_str() + " for s = " +
                sr.s.get_str() + ") can lie below l");
            break;
        }
    return rep;
}

FischerResult fischer_generators(const AbelianGroupSpec& a, unsigned long cap) {
    if (a.order > cap)
        throw CapExceededError("fischer_generators: group order " + a.order.get_str() +
                               " exceeds cap " + std::to_string(cap));
    const unsigned long order = to_ulong(a.order, "order");
    const std::size_t k = a.invariant_factors.size();

    // Row i is the character tuple of the i-th group element under the
    // self-duality pairing; mixed radix, last factor fastest.
    IntMatrix char_map(order, k);
    for (unsigned long i = 0; i < order; ++i) {
        unsigned long rest = i;
        for (std::size_t j = k; j-- > 0;) {
            const unsigned long fj = to_ulong(a.invariant_factors[j], "factor");
            char_map.at(i, j) = rest % fj;
            rest /= fj;
        }
    }
    FischerResult res;
    res.exponent_basis = kernel_mod(char_map, a.invariant_factors);
    res.index = lattice_index(res.exponent_basis, Lattice::standard(order));
    if (res.index != a.order) throw Error("fischer_generators: kernel index mismatch (internal)");
    return res;
}

}  // namespace gonality
