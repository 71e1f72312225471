#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridbasis/numbers.hpp"

namespace gridbasis {

/// Dense matrix of arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(std::vector<std::vector<Int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return entries_[index(r, c)]; }
    const Int& at(int r, int c) const { return entries_[index(r, c)]; }

    std::vector<Int> row(int r) const;
    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix&) const = default;

private:
    size_t index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
               static_cast<size_t>(c);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

/// Primitive integer basis of the left kernel {v : v^T A = 0}.
struct KernelBasis {
    /// Each vector has gcd 1 and a positive first nonzero entry; the list is
    /// linearly independent with size = rows - rank.
    std::vector<std::vector<Int>> vectors;
};

/// Result of fraction-free (Bareiss) row elimination of A, carried out on the
/// augmented matrix [A | I] so that every intermediate entry stays an integer.
/// transform * A = reduced holds exactly; rows of `reduced` from `rank` on are
/// zero, and the matching rows of `transform` span the left kernel of A.
struct Elimination {
    ExactMatrix reduced;
    ExactMatrix transform;
    std::vector<std::pair<int, int>> pivots;  // (row, col), row k has pivot k
    int rank = 0;
};

/// Pivot scan order: leftmost column first, then topmost remaining row.
Elimination bareiss_eliminate(const ExactMatrix& a);

/// Rank over the rationals.
int rank_exact(const ExactMatrix& a);

KernelBasis left_kernel_primitive(const ExactMatrix& a);

struct SolveOutcome {
    /// Present iff the system is consistent. Free variables are fixed to 0
    /// under the deterministic pivot order of bareiss_eliminate.
    std::optional<std::vector<Rat>> solution;
    /// On inconsistency: a primitive integer y with y^T A = 0 and <y, b> != 0.
    std::optional<std::vector<Int>> certificate;
};

/// Solves A x = b; throws ValueError on a length mismatch.
SolveOutcome solve_with_certificate(const ExactMatrix& a, const std::vector<Rat>& b);

std::optional<std::vector<Rat>> solve_exact(const ExactMatrix& a,
                                            const std::vector<Rat>& b);

}  // namespace gridbasis
