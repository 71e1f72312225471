#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridbasis/core.hpp"

namespace gridbasis {

/// A verified minimal non-basic set in canonical form with its irreducible
/// annihilation function.
struct SearchWitness {
    PointSet set;
    WeightFunction annihilation;
};

struct ConjectureResult {
    Int sum_abs;  // sum of |f| over the irreducible annihilation function
    Int rhs;      // 2 (|M| - n)
    bool holds = false;
};

struct SizeReport {
    int size = 0;
    bool realized = false;
    /// Exhaustive mode: number of subsets / canonical classes. Random mode:
    /// number of verified hits / distinct classes found within budget.
    long long raw_count = -1;
    long long canonical_count = -1;
    std::optional<SearchWitness> witness;  // lexicographically least class
    /// Conjecture audit over canonical classes (d = 3, layer-covering only).
    long long conjecture_pass = -1;
    long long conjecture_fail = -1;
    std::vector<SearchWitness> counterexamples;
};

struct SearchReport {
    GridShape grid;
    std::string mode;  // "exhaustive" | "random" | "reachability"
    bool layer_covering = true;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    int jobs = 1;
    std::vector<SizeReport> sizes;
};

/// Image of M under an axis permutation plus per-axis value permutations.
/// axis_perm maps old axis i to new axis axis_perm[i] (sides must match);
/// value_perms[i][v-1] is the new value of v on old axis i.
PointSet apply_symmetry(const PointSet& m, const std::vector<int>& axis_perm,
                        const std::vector<std::vector<int>>& value_perms);

/// Lexicographically least image of M under all axis permutations (between
/// axes of equal side) combined with per-axis value permutations. The group
/// permutes layers, so basicness, minimality, layer coverage and sum |f| are
/// invariant.
PointSet canonical_form(const PointSet& m);

/// All minimal non-basic subsets of [n]^d of size k (layer-covering ones only
/// when the flag is set), counted raw and up to symmetry, each class carrying
/// its irreducible annihilation function. Refuses requests beyond the
/// documented desk scale unless force is set.
SearchReport enumerate_minimal_nonbasic(int n, int d, int k, bool layer_covering,
                                        bool force = false, int jobs = 1);

/// Seeded random restarts with single-point swap moves, scored by kernel
/// dimension, layer coverage and zeros of the kernel generator. Reproducible
/// for a fixed seed, independently of the number of jobs.
SearchReport random_search(int n, int d, int k, std::uint64_t seed,
                           std::uint64_t budget, int jobs = 1);

/// Sum |f| versus 2(|M| - n) for the irreducible annihilation function of a
/// minimal non-basic layer-covering subset of a uniform 3-d grid. Throws
/// ValueError naming the violated precondition otherwise.
ConjectureResult check_conjecture(const PointSet& m);

/// For every k in [2n, dn - (d-2)]: is there a minimal non-basic subset of
/// size k meeting every layer? Exhaustive for n^d <= 27; staircase plus
/// random search above that.
SearchReport reachability_report(int n, int d, std::uint64_t seed = 1,
                                 std::uint64_t budget = 200000, int jobs = 1);

}  // namespace gridbasis
