#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "gonality/cyclotomic.hpp"
#include "gonality/integers.hpp"

namespace gonality {

IntMatrix trace_gram(unsigned long m) {
    const unsigned long n = phi_ul(m);
    const Int phi_m(n);
    std::vector<Int> tr(m);
    tr[0] = phi_m;
    for (unsigned long k = 1; k < m; ++k) {
        const unsigned long d = m / std::gcd(m, k);
        tr[k] = mobius(Int(d)) * div_exact(phi_m, euler_phi(Int(d)));
    }
    IntMatrix g(n, n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j) g.at(i, j) = tr[(i + m - j) % m];
    return g;
}

namespace {

Int round_nearest(const Rat& x) {
    // floor((2a + b) / (2b)) for x = a/b in lowest terms, b > 0
    const Int a = x.get_num(), b = x.get_den();
    return div_floor(2 * a + b, 2 * b);
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& basis, const IntMatrix& gram) {
    IntMatrix b = basis;
    const std::size_t n = b.rows;
    if (n <= 1) return b;

    auto dot = [&](std::size_t i, std::size_t j) {
        Int acc = 0;
        for (std::size_t r = 0; r < b.cols; ++r) {
            if (b.at(i, r) == 0) continue;
            Int inner = 0;
            for (std::size_t c = 0; c < b.cols; ++c)
                if (b.at(j, c) != 0) inner += gram.at(r, c) * b.at(j, c);
            acc += b.at(i, r) * inner;
        }
        return acc;
    };

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    std::vector<Rat> B(n);

    auto gso_row = [&](std::size_t k) {
        std::vector<Rat> c(k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            Rat x{dot(k, j)};
            for (std::size_t i = 0; i < j; ++i) x -= mu[j][i] * c[i];
            c[j] = x;
            if (j < k) mu[k][j] = x / B[j];
        }
        B[k] = c[k];
        if (B[k] <= 0) throw Error("lll_reduce: form is not positive definite on the basis");
    };

    auto size_reduce = [&](std::size_t k, std::size_t l) {
        Rat a = abs(mu[k][l]);
        if (cmp(a, Rat(1, 2)) <= 0) return;
        const Int q = round_nearest(mu[k][l]);
        for (std::size_t c = 0; c < b.cols; ++c) b.at(k, c) -= q * b.at(l, c);
        mu[k][l] -= Rat(q);
        for (std::size_t i = 0; i < l; ++i) mu[k][i] -= Rat(q) * mu[l][i];
    };

    gso_row(0);
    std::size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            gso_row(k);
        }
        size_reduce(k, k - 1);
        if (B[k] < (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            for (std::size_t c = 0; c < b.cols; ++c) std::swap(b.at(k - 1, c), b.at(k, c));
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            const Rat mu_s = mu[k][k - 1];
            const Rat b_new = B[k] + mu_s * mu_s * B[k - 1];
            mu[k][k - 1] = mu_s * B[k - 1] / b_new;
            B[k] = B[k - 1] * B[k] / b_new;
            B[k - 1] = b_new;
            for (std::size_t i = k + 1; i <= kmax; ++i) {
                const Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - mu_s * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = std::max<std::size_t>(1, k - 1);
        } else {
            for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
            ++k;
        }
    }
    return b;
}

namespace {

double log2_mpz(const Int& v) {
    long exp2 = 0;
    const double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp2);
}

constexpr double kLogMargin = 1e-6;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct BoxResult {
    Int best_norm;
    std::vector<Int> best_vec;  // power-basis coordinates, sign-normalized
    bool has_best = false;
    bool success = false;  // an element of norm exactly N(ideal) was found
    bool exhausted = false;
    std::uint64_t nodes = 0;
};

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<Int> sign_normalized(std::vector<Int> v) {
    for (const Int& c : v) {
        if (c == 0) continue;
        if (c > 0) return v;
        for (Int& x : v) x = -x;
        return v;
    }
    return v;
}

// Depth-first enumeration of coefficient vectors over the LLL-reduced basis,
// with interval pruning on the partial products |alpha(root)| over one root
// per conjugate pair. Floating point is used only to decide pruning and which
// leaves get an exact norm evaluation; every reported value is exact.
class BoxSearch {
  public:
    enum class Mode { minimize, target_one };

    BoxSearch(const CyclotomicIdeal& ideal, unsigned long radius, std::uint64_t budget,
              Mode mode)
        : m_(ideal.m),
          n_(ideal.lattice.ambient_rank),
          radius_(radius),
          budget_(budget),
          mode_(mode) {
        target_ = ideal_norm(ideal);
        target_log_ = log2_mpz(target_);
        reduced_ = lll_reduce(ideal.lattice.basis, trace_gram(m_));
        for (unsigned long k = 1; 2 * k < m_; ++k)
            if (std::gcd(k, m_) == 1) pair_ks_.push_back(k);
        const std::size_t p = pair_ks_.size();
        if (2 * p != n_) throw Error("enumeration requires phi(m) even, i.e. m >= 3");
        values_.assign(n_, std::vector<std::complex<double>>(p));
        for (std::size_t j = 0; j < p; ++j) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(pair_ks_[j]) / static_cast<double>(m_);
            const std::complex<double> omega{std::cos(angle), std::sin(angle)};
            for (std::size_t i = 0; i < n_; ++i) {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t c = n_; c-- > 0;)
                    acc = acc * omega + mpz_get_d(reduced_.at(i, c).get_mpz_t());
                values_[i][j] = acc;
            }
        }
        tails_.assign(n_ + 1, std::vector<double>(p, 0.0));
        for (std::size_t k = n_; k-- > 0;)
            for (std::size_t j = 0; j < p; ++j)
                tails_[k][j] =
                    tails_[k + 1][j] + static_cast<double>(radius_) * std::abs(values_[k][j]);
        z_.assign(n_ + 1, std::vector<std::complex<double>>(p));
        coeffs_.assign(n_, 0);
    }

    CyclotomicElement reduced_row_element(std::size_t i) const {
        return {m_, reduced_.row(i)};
    }

    // Exact evaluation of a candidate outside the walk (seeds, incumbents).
    void consider_seed(const CyclotomicElement& e) { consider_exact(e.coeffs); }

    BoxResult run() {
        if (!res_.success) walk(0, true);
        res_.nodes = nodes_;
        return res_;
    }

  private:
    enum class Walk { go, stop };

    // Interval for log2 |N(alpha)| over the subtree rooted at level `k`.
    void bounds(std::size_t k, double& llo, double& lhi) const {
        double lo_sum = 0.0, hi_sum = 0.0;
        bool lo_dead = false, hi_dead = false;
        for (std::size_t j = 0; j < pair_ks_.size(); ++j) {
            const double az = std::abs(z_[k][j]);
            const double lo = az - tails_[k][j];
            const double hi = az + tails_[k][j];
            if (lo <= 0.0)
                lo_dead = true;
            else
                lo_sum += std::log2(lo);
            if (hi <= 0.0)
                hi_dead = true;
            else
                hi_sum += std::log2(hi);
        }
        llo = lo_dead ? kNegInf : 2.0 * lo_sum;
        lhi = hi_dead ? kNegInf : 2.0 * hi_sum;
    }

    bool prune(double llo, double lhi) const {
        if (mode_ == Mode::target_one)
            return llo > target_log_ + kLogMargin || lhi < target_log_ - kLogMargin;
        return res_.has_best && llo > best_log_ + kLogMargin;
    }

    bool should_eval_leaf(double llo, double lhi) const {
        if (mode_ == Mode::target_one)
            return llo <= target_log_ + kLogMargin && lhi >= target_log_ - kLogMargin;
        return !res_.has_best || llo <= best_log_ + kLogMargin;
    }

    Walk consider_exact(const std::vector<Int>& vec) {
        const Int nrm = norm(CyclotomicElement{m_, vec});
        if (mode_ == Mode::target_one) {
            if (nrm != target_) return Walk::go;
            res_.best_norm = nrm;
            res_.best_vec = sign_normalized(vec);
            res_.has_best = true;
            res_.success = true;
            return Walk::stop;
        }
        if (!res_.has_best || nrm < res_.best_norm) {
            res_.best_norm = nrm;
            res_.best_vec = sign_normalized(vec);
            res_.has_best = true;
            best_log_ = log2_mpz(nrm);
            if (nrm == target_) {
                res_.success = true;
                return Walk::stop;
            }
        } else if (nrm == res_.best_norm) {
            std::vector<Int> cand = sign_normalized(vec);
            if (lex_less(cand, res_.best_vec)) res_.best_vec = std::move(cand);
        }
        return Walk::go;
    }

    Walk visit(std::size_t level, long c, bool leading_zero) {
        if (++nodes_ > budget_) {
            res_.exhausted = true;
            return Walk::stop;
        }
        const std::size_t p = pair_ks_.size();
        const double cd = static_cast<double>(c);
        for (std::size_t j = 0; j < p; ++j)
            z_[level + 1][j] = z_[level][j] + cd * values_[level][j];
        coeffs_[level] = c;
        const bool child_leading_zero = leading_zero && c == 0;

        double llo = 0.0, lhi = 0.0;
        bounds(level + 1, llo, lhi);
        if (level + 1 == n_) {
            if (child_leading_zero) return Walk::go;  // the zero vector
            if (!should_eval_leaf(llo, lhi)) return Walk::go;
            std::vector<Int> vec(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                if (coeffs_[i] == 0) continue;
                for (std::size_t jj = 0; jj < n_; ++jj)
                    vec[jj] += coeffs_[i] * reduced_.at(i, jj);
            }
            return consider_exact(vec);
        }
        if (prune(llo, lhi)) return Walk::go;
        return walk(level + 1, child_leading_zero);
    }

    Walk walk(std::size_t level, bool leading_zero) {
        const long r = static_cast<long>(radius_);
        if (visit(level, 0, leading_zero) == Walk::stop) return Walk::stop;
        for (long v = 1; v <= r; ++v) {
            if (visit(level, v, leading_zero) == Walk::stop) return Walk::stop;
            if (!leading_zero && visit(level, -v, leading_zero) == Walk::stop) return Walk::stop;
        }
        return Walk::go;
    }

    unsigned long m_;
    std::size_t n_;
    unsigned long radius_;
    std::uint64_t budget_;
    Mode mode_;
    Int target_;
    double target_log_ = 0.0;
    double best_log_ = 0.0;
    IntMatrix reduced_;
    std::vector<unsigned long> pair_ks_;
    std::vector<std::vector<std::complex<double>>> values_;
    std::vector<std::vector<double>> tails_;
    std::vector<std::vector<std::complex<double>>> z_;
    std::vector<long> coeffs_;
    std::uint64_t nodes_ = 0;
    BoxResult res_;
};

SearchOutcome trivial_ring_outcome(const CyclotomicIdeal& ideal, const Int& nrm) {
    // phi(m) = 1: the ring is Z, every ideal is d*Z with d = N(ideal).
    SearchOutcome out;
    out.best_index = 1;
    out.witness = CyclotomicElement::constant(ideal.m, nrm);
    out.certified = true;
    out.lower_bound = 1;
    out.nodes_visited = 0;
    return out;
}

}  // namespace

SearchOutcome min_principal_index(const CyclotomicIdeal& ideal, unsigned long radius,
                                  std::uint64_t budget,
                                  const std::optional<CyclotomicElement>& seed) {
    if (radius < 1) throw Error("min_principal_index: radius must be >= 1");
    const Int ideal_nrm = ideal_norm(ideal);
    if (seed) {
        if (seed->m != ideal.m)
            throw ModulusMismatchError("min_principal_index: seed modulus mismatch");
        if (seed->is_zero() || !ideal_contains(ideal, *seed))
            throw Error("min_principal_index: seed is not a nonzero element of the ideal");
    }
    if (ideal.lattice.ambient_rank == 1) return trivial_ring_outcome(ideal, ideal_nrm);

    const Int cof = min_cofactor_norm(ideal.m);
    BoxSearch search(ideal, radius, budget, BoxSearch::Mode::minimize);
    search.consider_seed(search.reduced_row_element(0));
    if (seed) search.consider_seed(*seed);
    const BoxResult r = search.run();

    SearchOutcome out;
    out.nodes_visited = r.nodes;
    if (r.best_norm % ideal_nrm != 0)
        throw Error("min_principal_index: best norm not divisible by ideal norm (internal)");
    out.best_index = div_exact(r.best_norm, ideal_nrm);
    out.witness = CyclotomicElement{ideal.m, r.best_vec};
    out.lower_bound = out.best_index == 1 ? Int(1) : cof;
    out.certified = out.best_index == 1 || out.best_index == cof;
    if (r.exhausted)
        throw BudgetExhaustedError("min_principal_index: node budget exhausted", out);
    return out;
}

SearchOutcome principality_search(const CyclotomicIdeal& ideal, unsigned long radius,
                                  std::uint64_t budget) {
    if (radius < 1) throw Error("principality_search: radius must be >= 1");
    const Int ideal_nrm = ideal_norm(ideal);
    if (ideal.lattice.ambient_rank == 1) return trivial_ring_outcome(ideal, ideal_nrm);

    const Int cof = min_cofactor_norm(ideal.m);
    BoxSearch search(ideal, radius, budget, BoxSearch::Mode::target_one);
    const BoxResult r = search.run();

    SearchOutcome out;
    out.nodes_visited = r.nodes;
    if (r.success) {
        out.best_index = 1;
        out.witness = CyclotomicElement{ideal.m, r.best_vec};
        out.certified = true;
        out.lower_bound = 1;
        return out;
    }
    // No generator in the box: report the index of the always-present
    // constant element N(ideal), carry no witness, and make no minimality claim.
    out.best_index = int_pow(ideal_nrm, static_cast<unsigned long>(ideal.lattice.ambient_rank - 1));
    out.witness = std::nullopt;
    out.certified = false;
    out.lower_bound = cof;
    if (r.exhausted)
        throw BudgetExhaustedError("principality_search: node budget exhausted", out);
    return out;
}

}  // namespace gonality
