#include "gonality/integers.hpp"

#include <algorithm>
#include <map>

namespace gonality {

namespace {

Int powm(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// The witness set below is deterministic for n < 3.317e24.
constexpr long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool composite_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Pollard rho with a deterministic parameter sweep; n odd composite > 1.
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        const Int cc = c;
        do {
            x = (x * x + cc) % n;
            y = (y * y + cc) % n;
            y = (y * y + cc) % n;
            d = gcd_int(x - y, n);
        } while (d == 1);
        if (d != n) return d;
    }
}

void factor_into(std::map<Int, unsigned long>& acc, Int n) {
    std::vector<Int> stack{n};
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_probable_prime(v)) {
            ++acc[v];
            continue;
        }
        Int d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
}

}  // namespace

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : pairs) v *= int_pow(p, e);
    return v;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (long a : kWitnesses) {
        if (composite_witness(n, Int(a), d, r)) return false;
    }
    return true;
}

Factorization factorize(Int n) {
    if (n < 1) throw Error("factorize: n must be >= 1");
    std::map<Int, unsigned long> acc;
    while (n % 2 == 0) {
        ++acc[2];
        n /= 2;
    }
    for (Int d = 3; d <= 1000000 && d * d <= n; d += 2) {
        while (n % d == 0) {
            ++acc[d];
            n /= d;
        }
    }
    if (n > 1) factor_into(acc, n);
    Factorization f;
    f.pairs.assign(acc.begin(), acc.end());
    return f;
}

Int euler_phi_of(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.pairs) phi *= int_pow(p, e - 1) * (p - 1);
    return phi;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw Error("euler_phi: n must be >= 1");
    return euler_phi_of(factorize(n));
}

Int multiplicative_order(const Int& a, const Int& n) {
    if (n < 2) throw Error("multiplicative_order: modulus must be >= 2");
    const Int r = mod_floor(a, n);
    if (gcd_int(r, n) != 1)
        throw NotCoprimeError("multiplicative_order: arguments are not coprime");
    Int e = euler_phi(n);
    for (const auto& [q, exp] : factorize(e).pairs) {
        (void)exp;
        while (e % q == 0 && powm(r, e / q, n) == 1) e /= q;
    }
    return e;
}

namespace {

bool is_primitive_root(const Int& residue, const Int& p, const Factorization& f_pm1) {
    if (residue <= 1) return false;  // 0 is not a unit; 1 has order 1 < p-1
    for (const auto& [q, e] : f_pm1.pairs) {
        (void)e;
        if (powm(residue, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

}  // namespace

PrimitiveRootResult least_primitive_root(const Int& p, RootCriterion criterion) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
        throw NotPrimeError("least_primitive_root: p must be an odd prime");
    const Factorization f = factorize(p - 1);
    if (criterion == RootCriterion::least_positive) {
        for (Int t = 2; t < p; ++t)
            if (is_primitive_root(t, p, f)) return {p, t, criterion};
    } else {
        for (Int v = 1; v < p; ++v) {
            if (is_primitive_root(v, p, f)) return {p, v, criterion};
            if (is_primitive_root(p - v, p, f)) return {p, -v, criterion};
        }
    }
    throw Error("least_primitive_root: no root found (unreachable for prime p)");
}

std::vector<ScanRow> primitive_root_bound_scan(const Int& limit) {
    std::vector<ScanRow> out;
    if (limit < 3) return out;
    if (limit > 10000000) throw Error("primitive_root_bound_scan: limit above 1e7 not supported");
    const unsigned long lim = mpz_get_ui(limit.get_mpz_t());
    std::vector<bool> sieve(lim + 1, true);
    for (unsigned long i = 2; i * i <= lim; ++i)
        if (sieve[i])
            for (unsigned long j = i * i; j <= lim; j += i) sieve[j] = false;
    for (unsigned long p = 3; p <= lim; p += 2) {
        if (!sieve[p]) continue;
        const Int pp = static_cast<unsigned long>(p);
        const auto root = least_primitive_root(pp, RootCriterion::least_absolute);
        const Int g = abs(root.t);
        out.push_back({pp, g, 4 * g * g <= pp});
    }
    return out;
}

int mobius(const Int& n) {
    const Factorization f = factorize(n);
    for (const auto& [p, e] : f.pairs) {
        (void)p;
        if (e >= 2) return 0;
    }
    return f.pairs.size() % 2 == 0 ? 1 : -1;
}

std::vector<Int> sorted_divisors(const Int& n) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factorize(n).pairs) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace gonality
