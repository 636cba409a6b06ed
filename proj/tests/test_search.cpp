#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonality/cyclotomic.hpp"
#include "gonality/integers.hpp"

using namespace gonality;

namespace {

CyclotomicElement elem(unsigned long m, const std::vector<long>& coeffs) {
    CyclotomicElement e = CyclotomicElement::zero(m);
    REQUIRE(coeffs.size() <= e.coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.coeffs[i] = coeffs[i];
    return e;
}

Int gram_norm(const IntMatrix& basis, const IntMatrix& gram, std::size_t i) {
    Int acc = 0;
    for (std::size_t r = 0; r < basis.cols; ++r)
        for (std::size_t c = 0; c < basis.cols; ++c)
            acc += basis.at(i, r) * gram.at(r, c) * basis.at(i, c);
    return acc;
}

}  // namespace

TEST_CASE("lll_reduce keeps the lattice and shrinks the first vector") {
    const CyclotomicIdeal a = ideal_from_generators({elem(12, {13}), elem(12, {-2, 1})});
    const IntMatrix gram = trace_gram(12);
    const IntMatrix red = lll_reduce(a.lattice.basis, gram);
    REQUIRE(red.rows == a.lattice.rank());
    // same lattice: HNF of the reduced rows equals the ideal lattice
    CHECK(hnf(red) == a.lattice);
    // the first reduced vector is no longer than any original basis vector
    Int best_orig = gram_norm(a.lattice.basis, gram, 0);
    for (std::size_t i = 1; i < a.lattice.rank(); ++i)
        best_orig = std::min(best_orig, gram_norm(a.lattice.basis, gram, i));
    CHECK(gram_norm(red, gram, 0) <= best_orig);
}

TEST_CASE("lll_reduce output satisfies the size-reduction and Lovasz conditions") {
    for (unsigned long m : {12ul, 28ul, 46ul}) {
        const CyclotomicIdeal a = ideal_from_generators(
            {CyclotomicElement::constant(m, Int(m == 46 ? 47 : (m == 28 ? 29 : 13))),
             CyclotomicElement::zeta_minus(m, Int(m == 46 ? -2 : 2))});
        const IntMatrix gram = trace_gram(m);
        const IntMatrix red = lll_reduce(a.lattice.basis, gram);
        const std::size_t n = red.rows;

        auto dot = [&](std::size_t i, std::size_t j) {
            Int acc = 0;
            for (std::size_t r = 0; r < red.cols; ++r)
                for (std::size_t c = 0; c < red.cols; ++c)
                    acc += red.at(i, r) * gram.at(r, c) * red.at(j, c);
            return acc;
        };
        // fresh Gram-Schmidt over rationals, independent of the implementation
        std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
        std::vector<Rat> bstar(n, Rat(0));
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rat> c(k + 1, Rat(0));
            for (std::size_t j = 0; j <= k; ++j) {
                Rat x{dot(k, j)};
                for (std::size_t i = 0; i < j; ++i) x -= mu[j][i] * c[i];
                c[j] = x;
                if (j < k) mu[k][j] = x / bstar[j];
            }
            bstar[k] = c[k];
            REQUIRE(bstar[k] > 0);
        }
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = 0; j < k; ++j) CHECK(cmp(abs(mu[k][j]), Rat(1, 2)) <= 0);
            CHECK(bstar[k] >= (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]);
        }
    }
}

TEST_CASE("principality search on the full ring") {
    const CyclotomicIdeal full = ideal_from_generators({elem(12, {1})});
    const SearchOutcome out = principality_search(full, 2, 100000);
    CHECK(out.certified);
    CHECK(out.best_index == 1);
    REQUIRE(out.witness);
    CHECK(norm(*out.witness) == 1);
}

TEST_CASE("principality search finds a generator of (5, zeta_4 - 2)") {
    const CyclotomicIdeal p5 = ideal_from_generators({elem(4, {5}), elem(4, {-2, 1})});
    const SearchOutcome out = principality_search(p5, 2, 100000);
    CHECK(out.certified);
    CHECK(out.best_index == 1);
    REQUIRE(out.witness);
    CHECK(norm(*out.witness) == 5);
    CHECK(ideal_contains(p5, *out.witness));
}

TEST_CASE("min_principal_index certifies (13, zeta_12 - 2) via the seed") {
    const CyclotomicIdeal a = ideal_from_generators({elem(12, {13}), elem(12, {-2, 1})});
    REQUIRE(ideal_norm(a) == 13);
    const CyclotomicElement seed = CyclotomicElement::zeta_minus(12, Int(2));
    CHECK(norm(seed) == 13);  // Phi_12(2) = 13
    const SearchOutcome out = min_principal_index(a, 2, 100000, seed);
    CHECK(out.best_index == 1);
    CHECK(out.certified);
    CHECK(out.lower_bound == 1);
    REQUIRE(out.witness);
    CHECK(norm(*out.witness) == 13);
    CHECK(ideal_contains(a, *out.witness));
}

TEST_CASE("witness invariants hold on a principal inert ideal") {
    const CyclotomicIdeal two = ideal_from_generators({elem(5, {2})});
    REQUIRE(ideal_norm(two) == 16);
    const SearchOutcome out = min_principal_index(two, 1, 100000);
    REQUIRE(out.witness);
    CHECK(norm(*out.witness) == out.best_index * 16);
    CHECK(ideal_contains(two, *out.witness));
    CHECK(out.best_index >= out.lower_bound);
    // (2) is principal: the search must find 2 itself (or a unit multiple)
    CHECK(out.best_index == 1);
}

TEST_CASE("trivial rings: phi(m) = 1") {
    const CyclotomicIdeal three = ideal_from_generators({elem(2, {3})});
    REQUIRE(ideal_norm(three) == 3);
    const SearchOutcome a = min_principal_index(three, 2, 1000);
    CHECK(a.best_index == 1);
    CHECK(a.certified);
    REQUIRE(a.witness);
    CHECK(norm(*a.witness) == 3);
    const SearchOutcome b = principality_search(three, 2, 1000);
    CHECK(b.certified);
    CHECK(b.best_index == 1);
}

TEST_CASE("budget exhaustion carries a usable partial outcome") {
    const CyclotomicIdeal a = ideal_from_generators({elem(46, {47}),
                                                     CyclotomicElement::zeta_minus(46, Int(-2))});
    REQUIRE(ideal_norm(a) == 47);
    const CyclotomicElement seed = CyclotomicElement::zeta_minus(46, Int(-2));
    try {
        (void)min_principal_index(a, 2, 2000, seed);
        FAIL("expected BudgetExhaustedError");
    } catch (const BudgetExhaustedError& e) {
        CHECK(e.partial.nodes_visited >= 2000);
        CHECK_FALSE(e.partial.certified);
        CHECK(e.partial.best_index >= e.partial.lower_bound);
        REQUIRE(e.partial.witness);
        CHECK(norm(*e.partial.witness) == e.partial.best_index * 47);
    }
}

TEST_CASE("min_principal_index agrees with principality_search on success") {
    // Spec invariant: best_index == 1 iff principality_search succeeds.
    const CyclotomicIdeal p5 = ideal_from_generators({elem(4, {5}), elem(4, {-2, 1})});
    const SearchOutcome mi = min_principal_index(p5, 2, 100000);
    const SearchOutcome ps = principality_search(p5, 2, 100000);
    CHECK(mi.best_index == 1);
    CHECK(ps.certified);

    const CyclotomicIdeal seven = ideal_from_generators({elem(5, {7})});  // norm 7^4, inert
    const SearchOutcome mi7 = min_principal_index(seven, 1, 200000);
    const SearchOutcome ps7 = principality_search(seven, 1, 200000);
    CHECK((mi7.best_index == 1) == (ps7.best_index == 1 && ps7.witness.has_value()));
}

TEST_CASE("search outcomes are deterministic") {
    const CyclotomicIdeal a = ideal_from_generators({elem(28, {29}),
                                                     CyclotomicElement::zeta_minus(28, Int(2))});
    auto run = [&] {
        try {
            return min_principal_index(a, 2, 400000, CyclotomicElement::zeta_minus(28, Int(2)));
        } catch (const BudgetExhaustedError& e) {
            return e.partial;
        }
    };
    const SearchOutcome r1 = run();
    const SearchOutcome r2 = run();
    CHECK(r1.best_index == r2.best_index);
    CHECK(r1.certified == r2.certified);
    CHECK(r1.nodes_visited == r2.nodes_visited);
    REQUIRE(r1.witness);
    REQUIRE(r2.witness);
    CHECK(r1.witness->coeffs == r2.witness->coeffs);
}
