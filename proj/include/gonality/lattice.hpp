#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gonality/base.hpp"

namespace gonality {

class NotSublatticeError : public Error {
  public:
    using Error::Error;
};

class InfiniteIndexError : public Error {
  public:
    using Error::Error;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    std::vector<Int> row(std::size_t i) const {
        return {entries.begin() + static_cast<long>(i * cols),
                entries.begin() + static_cast<long>((i + 1) * cols)};
    }

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    bool operator==(const IntMatrix&) const = default;
};

/// Full-row-rank sublattice of Z^ambient_rank. Rows of `basis` are the basis
/// vectors, in row-style HNF: pivots positive and strictly right of the
/// pivot above, entries above each pivot reduced into [0, pivot).
struct Lattice {
    std::size_t ambient_rank = 0;
    IntMatrix basis;

    std::size_t rank() const { return basis.rows; }
    static Lattice standard(std::size_t n);  // Z^n

    bool operator==(const Lattice&) const = default;
};

struct SnfResult {
    std::vector<Int> diag;  // nonnegative, each entry divides the next
    IntMatrix left;         // unimodular, rows x rows
    IntMatrix right;        // unimodular, cols x cols
};

/// Row-span-preserving Hermite normal form; zero rows dropped.
Lattice hnf(const IntMatrix& m);

/// HNF keeping zero rows, with the unimodular transform: transform * m = result.
IntMatrix hnf_with_transform(IntMatrix m, IntMatrix& transform);

/// Smith normal form: left * m * right = diag(diag) embedded in rows x cols.
SnfResult snf(const IntMatrix& m);

/// |super : sub|. Throws NotSublatticeError if some basis vector of sub is
/// not an integer combination of super's basis, InfiniteIndexError if
/// rank(sub) < rank(super).
Int lattice_index(const Lattice& sub, const Lattice& super);

/// Integer coordinates of v in l's basis, if v lies in the lattice.
std::optional<std::vector<Int>> coordinates_in(const Lattice& l, const std::vector<Int>& v);

bool lattice_contains(const Lattice& l, const std::vector<Int>& v);

/// Kernel of v -> v*map (mod moduli componentwise) as a full-rank sublattice
/// of Z^rows.
Lattice kernel_mod(const IntMatrix& map, const std::vector<Int>& moduli);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Determinant of a square matrix, fraction-free (Bareiss).
Int determinant(IntMatrix a);

}  // namespace gonality
