#include "gonality/cyclotomic.hpp"

#include <algorithm>

#include "gonality/integers.hpp"

namespace gonality {

namespace {

// Polynomials are coefficient vectors, low-to-high, no trailing zeros
// (except the zero polynomial = empty vector).

void poly_trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Exact quotient a / b for monic-leading exact division (used for products of
// cyclotomic polynomials, where division is exact over Z).
std::vector<Int> poly_divexact(std::vector<Int> a, const std::vector<Int>& b) {
    poly_trim(a);
    if (b.empty()) throw Error("poly_divexact: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw Error("poly_divexact: not divisible");
    std::vector<Int> q(a.size() - b.size() + 1);
    const Int& lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int qk = div_exact(a[k + b.size() - 1], lead);
        q[k] = qk;
        if (qk != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= qk * b[j];
    }
    for (const Int& c : a)
        if (c != 0) throw Error("poly_divexact: nonzero remainder");
    return q;
}

// Remainder of a modulo the monic polynomial b.
std::vector<Int> poly_mod_monic(std::vector<Int> a, const std::vector<Int>& b) {
    poly_trim(a);
    while (a.size() >= b.size()) {
        const Int lead = a.back();
        const std::size_t shift = a.size() - b.size();
        if (lead != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

std::vector<Int> x_pow_minus_one(unsigned long n) {
    std::vector<Int> p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace

unsigned long phi_ul(unsigned long m) {
    const Int p = euler_phi(Int(m));
    return mpz_get_ui(p.get_mpz_t());
}

Int CyclotomicPoly::eval(const Int& t) const {
    Int v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
}

CyclotomicPoly cyclotomic_poly(unsigned long m) {
    if (m < 1) throw Error("cyclotomic_poly: m must be >= 1");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, built over ascending divisors.
    std::vector<std::pair<unsigned long, std::vector<Int>>> known;
    const auto divisors = sorted_divisors(Int(m));
    for (const Int& dz : divisors) {
        const unsigned long d = mpz_get_ui(dz.get_mpz_t());
        std::vector<Int> f = x_pow_minus_one(d);
        for (const auto& [e, phi_e] : known)
            if (d % e == 0) f = poly_divexact(std::move(f), phi_e);
        known.emplace_back(d, std::move(f));
    }
    CyclotomicPoly out;
    out.m = m;
    out.coeffs = std::move(known.back().second);
    if (out.degree() != phi_ul(m)) throw Error("cyclotomic_poly: degree mismatch (internal)");
    return out;
}

CyclotomicElement CyclotomicElement::zero(unsigned long m) {
    CyclotomicElement e;
    e.m = m;
    e.coeffs.resize(phi_ul(m));
    return e;
}

CyclotomicElement CyclotomicElement::constant(unsigned long m, const Int& c) {
    CyclotomicElement e = zero(m);
    e.coeffs[0] = c;
    return e;
}

CyclotomicElement CyclotomicElement::zeta_minus(unsigned long m, const Int& t) {
    CyclotomicElement e = zero(m);
    if (e.coeffs.size() >= 2) {
        e.coeffs[0] = -t;
        e.coeffs[1] = 1;
    } else {
        // phi(m) = 1: zeta_1 = 1, zeta_2 = -1.
        e.coeffs[0] = (m == 1 ? Int(1) : Int(-1)) - t;
    }
    return e;
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

CyclotomicElement CyclotomicElement::normalized_sign() const {
    for (const Int& c : coeffs) {
        if (c == 0) continue;
        if (c > 0) return *this;
        CyclotomicElement e = *this;
        for (Int& x : e.coeffs) x = -x;
        return e;
    }
    return *this;
}

namespace {

void check_same_modulus(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.m != b.m) throw ModulusMismatchError("cyclotomic elements live in different rings");
}

// Coefficients of a * zeta_m, reduced against phi (monic cyclotomic poly).
std::vector<Int> shift_by_zeta(const std::vector<Int>& a, const std::vector<Int>& phi) {
    const std::size_t n = a.size();
    std::vector<Int> r(n);
    const Int& top = a[n - 1];
    // x^n == -(phi_0 + phi_1 x + ... + phi_{n-1} x^{n-1})
    r[0] = -top * phi[0];
    for (std::size_t i = 1; i < n; ++i) r[i] = a[i - 1] - top * phi[i];
    return r;
}

// Rows of the multiplication-by-a matrix: row i = coefficients of a * zeta^i.
IntMatrix multiplication_matrix(const CyclotomicElement& a, const std::vector<Int>& phi) {
    const std::size_t n = a.coeffs.size();
    IntMatrix mat(n, n);
    std::vector<Int> row = a.coeffs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = row[j];
        if (i + 1 < n) row = shift_by_zeta(row, phi);
    }
    return mat;
}

}  // namespace

CyclotomicElement mul(const CyclotomicElement& a, const CyclotomicElement& b) {
    check_same_modulus(a, b);
    const CyclotomicPoly phi = cyclotomic_poly(a.m);
    std::vector<Int> prod = poly_mod_monic(poly_mul(a.coeffs, b.coeffs), phi.coeffs);
    prod.resize(a.coeffs.size());
    return {a.m, std::move(prod)};
}

CyclotomicElement add(const CyclotomicElement& a, const CyclotomicElement& b) {
    check_same_modulus(a, b);
    CyclotomicElement c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
    return c;
}

Int norm(const CyclotomicElement& a) {
    const CyclotomicPoly phi = cyclotomic_poly(a.m);
    return abs(determinant(multiplication_matrix(a, phi.coeffs)));
}

namespace {

void check_ideal_invariants(const CyclotomicIdeal& ideal, const std::vector<Int>& phi) {
    const std::size_t n = ideal.lattice.ambient_rank;
    if (ideal.lattice.rank() != n)
        throw ZeroIdealError("cyclotomic ideal: generators span a rank-deficient lattice");
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Int> shifted = shift_by_zeta(ideal.lattice.basis.row(i), phi);
        if (!lattice_contains(ideal.lattice, shifted))
            throw Error("cyclotomic ideal: lattice is not stable under zeta (internal)");
    }
}

CyclotomicIdeal ideal_from_row_lattice(unsigned long m, Lattice lat,
                                       const std::vector<Int>& phi) {
    CyclotomicIdeal ideal;
    ideal.m = m;
    ideal.lattice = std::move(lat);
    check_ideal_invariants(ideal, phi);
    return ideal;
}

}  // namespace

CyclotomicIdeal ideal_from_generators(const std::vector<CyclotomicElement>& gens) {
    if (gens.empty()) throw ZeroIdealError("ideal_from_generators: no generators");
    const unsigned long m = gens[0].m;
    for (const auto& g : gens)
        if (g.m != m) throw ModulusMismatchError("ideal_from_generators: mixed moduli");
    const CyclotomicPoly phi = cyclotomic_poly(m);
    const std::size_t n = phi.degree();
    std::vector<std::vector<Int>> rows;
    rows.reserve(gens.size() * n);
    for (const auto& g : gens) {
        std::vector<Int> row = g.coeffs;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(row);
            if (i + 1 < n) row = shift_by_zeta(row, phi.coeffs);
        }
    }
    Lattice lat = hnf(IntMatrix::from_rows(rows));
    if (lat.rank() != n)
        throw ZeroIdealError("ideal_from_generators: generators span a rank-deficient lattice");
    return ideal_from_row_lattice(m, std::move(lat), phi.coeffs);
}

Int ideal_norm(const CyclotomicIdeal& i) {
    // Index in the full ring; for an HNF basis this is the pivot product.
    return lattice_index(i.lattice, Lattice::standard(i.lattice.ambient_rank));
}

Int ideal_index(const CyclotomicIdeal& inner, const CyclotomicIdeal& outer) {
    if (inner.m != outer.m) throw ModulusMismatchError("ideal_index: mixed moduli");
    Int idx;
    try {
        idx = lattice_index(inner.lattice, outer.lattice);
    } catch (const NotSublatticeError&) {
        throw NotContainedError("ideal_index: inner ideal is not contained in outer");
    }
    if (idx * ideal_norm(outer) != ideal_norm(inner))
        throw Error("ideal_index: index does not match the norm quotient (internal)");
    return idx;
}

CyclotomicIdeal ideal_mul(const CyclotomicIdeal& a, const CyclotomicIdeal& b) {
    if (a.m != b.m) throw ModulusMismatchError("ideal_mul: mixed moduli");
    const CyclotomicPoly phi = cyclotomic_poly(a.m);
    const std::size_t n = phi.degree();
    std::vector<std::vector<Int>> rows;
    rows.reserve(a.lattice.rank() * b.lattice.rank());
    for (std::size_t i = 0; i < a.lattice.rank(); ++i) {
        const CyclotomicElement ai{a.m, a.lattice.basis.row(i)};
        for (std::size_t j = 0; j < b.lattice.rank(); ++j) {
            const CyclotomicElement bj{b.m, b.lattice.basis.row(j)};
            rows.push_back(mul(ai, bj).coeffs);
        }
    }
    Lattice lat = hnf(IntMatrix::from_rows(rows));
    if (lat.rank() != n) throw Error("ideal_mul: product lost rank (internal)");
    CyclotomicIdeal prod = ideal_from_row_lattice(a.m, std::move(lat), phi.coeffs);
    if (ideal_norm(prod) != ideal_norm(a) * ideal_norm(b))
        throw Error("ideal_mul: norm is not multiplicative (internal)");
    return prod;
}

CyclotomicIdeal ideal_pow(const CyclotomicIdeal& a, unsigned long n) {
    if (n < 1) throw Error("ideal_pow: exponent must be >= 1");
    CyclotomicIdeal acc = a;
    for (unsigned long i = 1; i < n; ++i) acc = ideal_mul(acc, a);
    return acc;
}

bool ideal_contains(const CyclotomicIdeal& i, const CyclotomicElement& a) {
    if (i.m != a.m) throw ModulusMismatchError("ideal_contains: mixed moduli");
    return lattice_contains(i.lattice, a.coeffs);
}

unsigned long conductor(unsigned long m) {
    if (m % 4 == 2) return m / 2;
    return m;
}

namespace {

// Residue degree of the prime q in Q(zeta_m), via the conductor c:
// f = ord of q mod c for unramified q; for q | c the order is taken mod the
// prime-to-q part of c.
unsigned long residue_degree(const Int& q, unsigned long c) {
    Int cc = c;
    while (cc % q == 0) cc /= q;
    if (cc == 1) return 1;
    const Int f = multiplicative_order(q, cc);
    return mpz_get_ui(f.get_mpz_t());
}

Int next_prime(const Int& q) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), q.get_mpz_t());
    return r;
}

}  // namespace

Int min_cofactor_norm(unsigned long m, const Int& prime_limit) {
    if (m <= 2) return 1;
    const unsigned long c = conductor(m);
    std::optional<Int> best;
    for (Int q = 2; q <= prime_limit; q = next_prime(q)) {
        if (best && q > *best) return *best;  // no later prime can improve
        const Int val = int_pow(q, residue_degree(q, c));
        if (!best || val < *best) best = val;
    }
    // The cap bound first: clamp so the result stays a valid lower bound
    // (any prime beyond the cap has q^f >= q > prime_limit).
    Int clamp = prime_limit + 1;
    if (best && *best < clamp) return *best;
    return clamp;
}

}  // namespace gonality
