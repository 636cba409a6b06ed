#include "gonality/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace gonality {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw Error("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Lattice Lattice::standard(std::size_t n) { return {n, IntMatrix::identity(n)}; }

namespace {

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// row_i -= q * row_k
void row_submul(IntMatrix& m, std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(k, j);
}

// Replace (row_r, row_i) by the unimodular gcd combination that leaves
// gcd(m[r][j], m[i][j]) at (r, j) and 0 at (i, j).
void rows_gcd_combine(IntMatrix& m, IntMatrix* u, std::size_t r, std::size_t i, std::size_t j) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.at(r, j).get_mpz_t(),
               m.at(i, j).get_mpz_t());
    const Int a = div_exact(m.at(r, j), g);
    const Int b = div_exact(m.at(i, j), g);
    auto combine = [&](IntMatrix& w) {
        for (std::size_t c = 0; c < w.cols; ++c) {
            const Int x = w.at(r, c), y = w.at(i, c);
            w.at(r, c) = s * x + t * y;
            w.at(i, c) = a * y - b * x;
        }
    };
    combine(m);
    if (u) combine(*u);
}

// In-place row HNF. Returns the pivot columns; rows >= pivots.size() end up
// zero. Applies every row operation to *u as well when u != nullptr.
std::vector<std::size_t> hnf_in_place(IntMatrix& m, IntMatrix* u) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t nz = r;
        while (nz < m.rows && m.at(nz, j) == 0) ++nz;
        if (nz == m.rows) continue;
        row_swap(m, r, nz);
        if (u) row_swap(*u, r, nz);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, j) != 0) rows_gcd_combine(m, u, r, i, j);
        }
        if (m.at(r, j) < 0) {
            row_negate(m, r);
            if (u) row_negate(*u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Int q = div_floor(m.at(i, j), m.at(r, j));
            row_submul(m, i, r, q);
            if (u) row_submul(*u, i, r, q);
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

}  // namespace

Lattice hnf(const IntMatrix& m) {
    IntMatrix h = m;
    const auto pivots = hnf_in_place(h, nullptr);
    IntMatrix basis(pivots.size(), m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) basis.at(i, j) = h.at(i, j);
    return {m.cols, std::move(basis)};
}

IntMatrix hnf_with_transform(IntMatrix m, IntMatrix& transform) {
    transform = IntMatrix::identity(m.rows);
    hnf_in_place(m, &transform);
    return m;
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(m.rows);
    IntMatrix right = IntMatrix::identity(m.cols);

    auto col_swap = [&](IntMatrix& w, std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < w.rows; ++i) std::swap(w.at(i, a), w.at(i, b));
    };
    auto col_submul = [&](IntMatrix& w, std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < w.rows; ++i) w.at(i, a) -= q * w.at(i, b);
    };

    const std::size_t nmin = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Locate the minimal nonzero |entry| in the trailing submatrix.
            std::size_t bi = t, bj = t;
            bool found = false;
            for (std::size_t i = t; i < d.rows; ++i)
                for (std::size_t j = t; j < d.cols; ++j)
                    if (d.at(i, j) != 0 &&
                        (!found || cmp(abs(d.at(i, j)), abs(d.at(bi, bj))) < 0)) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
            if (!found) break;  // trailing submatrix is zero
            row_swap(d, t, bi);
            row_swap(left, t, bi);
            col_swap(d, t, bj);
            col_swap(right, t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                const Int q = div_floor(d.at(i, t), d.at(t, t));
                row_submul(d, i, t, q);
                row_submul(left, i, t, q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                const Int q = div_floor(d.at(t, j), d.at(t, t));
                col_submul(d, j, t, q);
                col_submul(right, j, t, q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot divides every remaining entry, or fold a violating row in.
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_submul(d, t, i, Int(-1));
                        row_submul(left, t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            row_negate(d, t);
            row_negate(left, t);
        }
    }

    SnfResult out;
    out.diag.resize(nmin);
    for (std::size_t t = 0; t < nmin; ++t) out.diag[t] = d.at(t, t);
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

std::optional<std::vector<Int>> coordinates_in(const Lattice& l, const std::vector<Int>& v) {
    if (v.size() != l.ambient_rank) throw Error("coordinates_in: dimension mismatch");
    std::vector<Int> w = v;
    std::vector<Int> x(l.rank());
    // Pivot columns of the echelon basis, in order.
    std::size_t col = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        while (col < l.ambient_rank && l.basis.at(i, col) == 0) {
            if (w[col] != 0) return std::nullopt;
            ++col;
        }
        if (col == l.ambient_rank) return std::nullopt;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[col].get_mpz_t(),
                    l.basis.at(i, col).get_mpz_t());
        if (r != 0) return std::nullopt;
        x[i] = q;
        if (q != 0)
            for (std::size_t j = col; j < l.ambient_rank; ++j) w[j] -= q * l.basis.at(i, j);
        ++col;
    }
    for (std::size_t j = 0; j < l.ambient_rank; ++j)
        if (w[j] != 0) return std::nullopt;
    return x;
}

bool lattice_contains(const Lattice& l, const std::vector<Int>& v) {
    return coordinates_in(l, v).has_value();
}

Int lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_rank != super.ambient_rank)
        throw Error("lattice_index: ambient ranks differ");
    IntMatrix coords(sub.rank(), super.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto x = coordinates_in(super, sub.basis.row(i));
        if (!x) throw NotSublatticeError("lattice_index: sub is not contained in super");
        for (std::size_t j = 0; j < super.rank(); ++j) coords.at(i, j) = (*x)[j];
    }
    if (sub.rank() < super.rank())
        throw InfiniteIndexError("lattice_index: sub has smaller rank than super");
    if (sub.rank() != super.rank())
        throw Error("lattice_index: rank bookkeeping failed (internal)");
    return abs(determinant(std::move(coords)));
}

Lattice kernel_mod(const IntMatrix& map, const std::vector<Int>& moduli) {
    if (map.cols != moduli.size()) throw Error("kernel_mod: moduli length mismatch");
    for (const Int& mo : moduli)
        if (mo < 1) throw Error("kernel_mod: moduli must be positive");
    const std::size_t r = map.rows, c = map.cols;
    IntMatrix stacked(r + c, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) stacked.at(i, j) = map.at(i, j);
    for (std::size_t j = 0; j < c; ++j) stacked.at(r + j, j) = moduli[j];

    IntMatrix u;
    IntMatrix h = hnf_with_transform(std::move(stacked), u);
    std::vector<std::vector<Int>> kernel_rows;
    for (std::size_t i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < c && zero; ++j) zero = h.at(i, j) == 0;
        if (!zero) continue;
        std::vector<Int> v(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = u.at(i, j);
        kernel_rows.push_back(std::move(v));
    }
    Lattice k = hnf(IntMatrix::from_rows(kernel_rows));
    k.ambient_rank = r;
    if (k.rank() != r) throw Error("kernel_mod: kernel rank defect (internal)");
    return k;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error("matmul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Int determinant(IntMatrix a) {
    if (a.rows != a.cols) throw Error("determinant: matrix not square");
    const std::size_t n = a.rows;
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k) == 0) ++s;
            if (s == n) return 0;
            row_swap(a, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

}  // namespace gonality
