#include "gridbasis/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "gridbasis/basis.hpp"
#include "gridbasis/constructions.hpp"
#include "gridbasis/errors.hpp"

namespace gridbasis {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Bounded draw with a fixed algorithm: std::uniform_int_distribution output
/// differs across standard libraries, which would break reproducibility.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<size_t>(draw_below(rng, i))]);
}

std::vector<Point> all_cells(const GridShape& shape) {
    std::vector<Point> cells;
    cells.reserve(static_cast<size_t>(shape.cell_count()));
    Point cell(std::vector<int>(static_cast<size_t>(shape.dim()), 1));
    for (;;) {
        cells.push_back(cell);
        int i = shape.dim() - 1;
        while (i >= 0 && cell.coords[static_cast<size_t>(i)] == shape.side(i)) {
            cell.coords[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cell.coords[static_cast<size_t>(i)];
    }
    return cells;
}

/// Exact rational row echelon supporting push/pop, for rank bookkeeping
/// during subset enumeration. Stored rows never change after insertion, so
/// undoing a push is just removing the last row.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(int cols)
        : cols_(cols), pivot_row_(static_cast<size_t>(cols), -1) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the echelon; keeps it iff independent.
    bool push(std::vector<Rat> v) {
        for (int c = 0; c < cols_; ++c) {
            Rat& x = v[static_cast<size_t>(c)];
            if (x == 0) continue;
            const int r = pivot_row_[static_cast<size_t>(c)];
            if (r < 0) {
                pivot_row_[static_cast<size_t>(c)] = static_cast<int>(rows_.size());
                pivot_col_.push_back(c);
                rows_.push_back(std::move(v));
                return true;
            }
            const Rat factor = x / rows_[static_cast<size_t>(r)][static_cast<size_t>(c)];
            for (int j = c; j < cols_; ++j) {
                const Rat& rv = rows_[static_cast<size_t>(r)][static_cast<size_t>(j)];
                if (rv != 0) v[static_cast<size_t>(j)] -= factor * rv;
            }
        }
        return false;
    }

    /// Undoes the most recent successful push.
    void pop() {
        pivot_row_[static_cast<size_t>(pivot_col_.back())] = -1;
        pivot_col_.pop_back();
        rows_.pop_back();
    }

private:
    int cols_;
    std::vector<int> pivot_row_;
    std::vector<int> pivot_col_;
    std::vector<std::vector<Rat>> rows_;
};

std::vector<Rat> incidence_row(const GridShape& shape, const Point& p) {
    std::vector<Rat> row(static_cast<size_t>(shape.layer_count()), Rat(0));
    for (int i = 0; i < shape.dim(); ++i)
        row[static_cast<size_t>(shape.layer_index({i, p[i]}))] = 1;
    return row;
}

std::vector<std::vector<int>> axis_perms(const GridShape& shape) {
    const int d = shape.dim();
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            ok = shape.side(perm[static_cast<size_t>(i)]) == shape.side(i);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<int>> value_perms(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Full verification of a candidate witness.
bool verify_witness(const PointSet& m, bool need_covering) {
    if (need_covering && !covers_all_layers(m)) return false;
    const std::vector<WeightFunction> kernel = annihilation_basis(m);
    if (kernel.size() != 1) return false;
    for (const Rat& v : kernel[0].values())
        if (v == 0) return false;
    return is_minimal_nonbasic(m);
}

SearchWitness make_witness(const PointSet& m) {
    PointSet canon = canonical_form(m);
    WeightFunction f = irreducible_annihilation(canon);
    return SearchWitness{std::move(canon), std::move(f)};
}

struct ClassAccumulator {
    long long raw = 0;
    std::map<std::vector<Point>, SearchWitness> classes;

    void add(const PointSet& m) {
        ++raw;
        PointSet canon = canonical_form(m);
        auto it = classes.find(canon.points());
        if (it == classes.end()) {
            WeightFunction f = irreducible_annihilation(canon);
            classes.emplace(canon.points(),
                            SearchWitness{std::move(canon), std::move(f)});
        }
    }

    void merge(ClassAccumulator&& other) {
        raw += other.raw;
        classes.merge(std::move(other.classes));
    }
};

/// Fills realized/witness/conjecture fields from accumulated classes.
void finish_size_report(SizeReport& report, const ClassAccumulator& acc,
                        const GridShape& shape, bool covering) {
    report.raw_count = acc.raw;
    report.canonical_count = static_cast<long long>(acc.classes.size());
    report.realized = !acc.classes.empty();
    if (report.realized) report.witness = acc.classes.begin()->second;
    if (covering && shape.dim() == 3 && shape.is_uniform()) {
        report.conjecture_pass = 0;
        report.conjecture_fail = 0;
        for (const auto& [pts, wit] : acc.classes) {
            const ConjectureResult res = check_conjecture(wit.set);
            if (res.holds) {
                ++report.conjecture_pass;
            } else {
                ++report.conjecture_fail;
                report.counterexamples.push_back(wit);
            }
        }
    }
}

struct EnumerationContext {
    GridShape shape;
    int k = 0;
    bool covering = false;
    std::vector<Point> cells;
    std::vector<std::vector<Rat>> rows;
    // remaining_at[layer][idx] = cells with index >= idx lying in the layer
    std::vector<std::vector<int>> remaining_at;
};

void enumeration_dfs(const EnumerationContext& ctx, int next, int depth,
                     std::vector<int>& chosen, std::vector<int>& layer_count,
                     IncrementalEchelon& echelon, ClassAccumulator& acc) {
    const int n_cells = static_cast<int>(ctx.cells.size());
    const int slots = ctx.k - depth;
    if (n_cells - next < slots) return;
    const int layers = ctx.shape.layer_count();
    if (ctx.covering) {
        // Minimal layer-covering sets need two points in every layer, which
        // also caps the total overfill at d*k.
        int total_need = 0;
        int total_commit = 0;
        for (int l = 0; l < layers; ++l) {
            const int cnt = layer_count[static_cast<size_t>(l)];
            const int need = cnt >= 2 ? 0 : 2 - cnt;
            if (need > ctx.remaining_at[static_cast<size_t>(l)][static_cast<size_t>(next)])
                return;
            total_need += need;
            total_commit += cnt > 2 ? cnt : 2;
        }
        if (total_need > ctx.shape.dim() * slots) return;
        if (total_commit > ctx.shape.dim() * ctx.k) return;
    }
    if (slots == 0) return;  // complete sets are handled at the last insertion

    for (int idx = next; idx <= n_cells - slots; ++idx) {
        const bool independent = echelon.push(ctx.rows[static_cast<size_t>(idx)]);
        chosen.push_back(idx);
        if (!independent) {
            // A dependent point closes the set: any earlier dependence would
            // make a proper subset non-basic, so only the last slot may be
            // dependent, and then the kernel dimension is exactly one.
            if (depth + 1 == ctx.k) {
                bool ok = true;
                if (ctx.covering) {
                    const Point& p = ctx.cells[static_cast<size_t>(idx)];
                    for (int l = 0; l < layers && ok; ++l) {
                        int cnt = layer_count[static_cast<size_t>(l)];
                        for (int i = 0; i < ctx.shape.dim(); ++i)
                            if (ctx.shape.layer_index({i, p[i]}) == l) ++cnt;
                        ok = cnt >= 2;
                    }
                }
                if (ok) {
                    std::vector<Point> pts;
                    pts.reserve(static_cast<size_t>(ctx.k));
                    for (int c : chosen) pts.push_back(ctx.cells[static_cast<size_t>(c)]);
                    PointSet m = PointSet::from_sorted_unique(ctx.shape, std::move(pts));
                    if (verify_witness(m, ctx.covering)) acc.add(m);
                }
            }
            chosen.pop_back();
            continue;
        }
        if (depth + 1 < ctx.k) {
            const Point& p = ctx.cells[static_cast<size_t>(idx)];
            for (int i = 0; i < ctx.shape.dim(); ++i)
                ++layer_count[static_cast<size_t>(ctx.shape.layer_index({i, p[i]}))];
            enumeration_dfs(ctx, idx + 1, depth + 1, chosen, layer_count, echelon, acc);
            for (int i = 0; i < ctx.shape.dim(); ++i)
                --layer_count[static_cast<size_t>(ctx.shape.layer_index({i, p[i]}))];
        }
        echelon.pop();
        chosen.pop_back();
    }
}

}  // namespace

PointSet apply_symmetry(const PointSet& m, const std::vector<int>& axis_perm,
                        const std::vector<std::vector<int>>& value_perms) {
    const GridShape& shape = m.shape();
    const int d = shape.dim();
    if (static_cast<int>(axis_perm.size()) != d ||
        static_cast<int>(value_perms.size()) != d)
        throw ValueError("symmetry has the wrong dimension");
    for (int i = 0; i < d; ++i) {
        if (shape.side(axis_perm[static_cast<size_t>(i)]) != shape.side(i))
            throw ValueError("axis permutation must preserve side lengths");
        if (static_cast<int>(value_perms[static_cast<size_t>(i)].size()) !=
            shape.side(i))
            throw ValueError("value permutation has the wrong length");
    }
    std::vector<Point> out;
    out.reserve(m.points().size());
    for (const Point& p : m.points()) {
        Point q(std::vector<int>(static_cast<size_t>(d), 1));
        for (int i = 0; i < d; ++i)
            q.coords[static_cast<size_t>(axis_perm[static_cast<size_t>(i)])] =
                value_perms[static_cast<size_t>(i)][static_cast<size_t>(p[i] - 1)];
        out.push_back(std::move(q));
    }
    return PointSet(m.shape(), std::move(out));
}

PointSet canonical_form(const PointSet& m) {
    if (m.empty()) return m;
    const GridShape& shape = m.shape();
    const int d = shape.dim();
    const auto axes = axis_perms(shape);
    std::vector<std::vector<std::vector<int>>> values;
    values.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) values.push_back(value_perms(shape.side(i)));

    std::optional<std::vector<Point>> best;
    std::vector<size_t> odometer(static_cast<size_t>(d), 0);
    for (const auto& axis_perm : axes) {
        std::fill(odometer.begin(), odometer.end(), 0);
        for (;;) {
            std::vector<Point> image;
            image.reserve(m.points().size());
            for (const Point& p : m.points()) {
                Point q(std::vector<int>(static_cast<size_t>(d), 1));
                for (int i = 0; i < d; ++i)
                    q.coords[static_cast<size_t>(axis_perm[static_cast<size_t>(i)])] =
                        values[static_cast<size_t>(i)][odometer[static_cast<size_t>(i)]]
                              [static_cast<size_t>(p[i] - 1)];
                image.push_back(std::move(q));
            }
            std::sort(image.begin(), image.end());
            if (!best || image < *best) best = std::move(image);

            int i = d - 1;
            while (i >= 0 &&
                   odometer[static_cast<size_t>(i)] + 1 ==
                       values[static_cast<size_t>(i)].size()) {
                odometer[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++odometer[static_cast<size_t>(i)];
        }
    }
    return PointSet::from_sorted_unique(shape, std::move(*best));
}

SearchReport enumerate_minimal_nonbasic(int n, int d, int k, bool layer_covering,
                                        bool force, int jobs) {
    const GridShape shape = GridShape::uniform(d, n);
    if (k < 0) throw ValueError("subset size must be nonnegative");
    if (jobs < 1) throw ValueError("jobs must be at least 1");
    const long long n_cells = shape.cell_count();
    const bool feasible =
        n_cells <= 27 || (n_cells <= 64 && layer_covering && k <= 2 * n + 1);
    if (!feasible && !force) {
        mpz_class work;
        mpz_bin_uiui(work.get_mpz_t(), static_cast<unsigned long>(n_cells),
                     static_cast<unsigned long>(std::max(k, 0)));
        throw FeasibilityError(
            "exhaustive enumeration over C(" + std::to_string(n_cells) + ", " +
                std::to_string(k) + ") = " + work.get_str() +
                " subsets exceeds the desk-scale limit; pass force to run anyway",
            work.get_str());
    }

    EnumerationContext ctx;
    ctx.shape = shape;
    ctx.k = k;
    ctx.covering = layer_covering;
    ctx.cells = all_cells(shape);
    for (const Point& p : ctx.cells) ctx.rows.push_back(incidence_row(shape, p));
    const int layers = shape.layer_count();
    ctx.remaining_at.assign(static_cast<size_t>(layers),
                            std::vector<int>(ctx.cells.size() + 1, 0));
    for (int l = 0; l < layers; ++l) {
        const Layer layer = shape.layer_at(l);
        for (int idx = static_cast<int>(ctx.cells.size()) - 1; idx >= 0; --idx) {
            const int in_layer =
                ctx.cells[static_cast<size_t>(idx)][layer.axis] == layer.value;
            ctx.remaining_at[static_cast<size_t>(l)][static_cast<size_t>(idx)] =
                ctx.remaining_at[static_cast<size_t>(l)][static_cast<size_t>(idx + 1)] +
                in_layer;
        }
    }

    // Workers split on the first chosen cell; the merged result does not
    // depend on scheduling because classes dedupe by canonical form.
    const int worker_count = std::max(1, std::min<int>(jobs, static_cast<int>(ctx.cells.size())));
    std::vector<ClassAccumulator> results(static_cast<size_t>(worker_count));
    auto run_worker = [&](int w) {
        std::vector<int> chosen;
        std::vector<int> layer_count(static_cast<size_t>(layers), 0);
        IncrementalEchelon echelon(layers);
        ClassAccumulator& acc = results[static_cast<size_t>(w)];
        if (k == 0) return;
        for (int first = w; first < static_cast<int>(ctx.cells.size());
             first += worker_count) {
            // Re-run the top level with the first cell pinned.
            const bool independent = echelon.push(ctx.rows[static_cast<size_t>(first)]);
            chosen.push_back(first);
            if (independent) {
                if (k > 1) {
                    const Point& p = ctx.cells[static_cast<size_t>(first)];
                    for (int i = 0; i < shape.dim(); ++i)
                        ++layer_count[static_cast<size_t>(shape.layer_index({i, p[i]}))];
                    enumeration_dfs(ctx, first + 1, 1, chosen, layer_count, echelon, acc);
                    for (int i = 0; i < shape.dim(); ++i)
                        --layer_count[static_cast<size_t>(shape.layer_index({i, p[i]}))];
                }
                echelon.pop();
            }
            chosen.pop_back();
        }
    };
    if (worker_count == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < worker_count; ++w)
            threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }
    ClassAccumulator merged;
    for (auto& acc : results) merged.merge(std::move(acc));

    SearchReport report;
    report.grid = shape;
    report.mode = "exhaustive";
    report.layer_covering = layer_covering;
    report.jobs = jobs;
    report.sizes.emplace_back();
    report.sizes.back().size = k;
    finish_size_report(report.sizes.back(), merged, shape, layer_covering);
    return report;
}

namespace {

struct LocalSearchSpace {
    GridShape shape;
    int k = 0;
    std::vector<Point> cells;
    std::vector<std::vector<Rat>> rows;
};

long long candidate_cost(const LocalSearchSpace& space,
                         const std::vector<int>& members) {
    const GridShape& shape = space.shape;
    std::vector<std::vector<Int>> rows;
    rows.reserve(members.size());
    for (int idx : members) {
        std::vector<Int> row(static_cast<size_t>(shape.layer_count()), Int(0));
        const Point& p = space.cells[static_cast<size_t>(idx)];
        for (int i = 0; i < shape.dim(); ++i)
            row[static_cast<size_t>(shape.layer_index({i, p[i]}))] = 1;
        rows.push_back(std::move(row));
    }
    const KernelBasis kernel =
        left_kernel_primitive(ExactMatrix::from_rows(std::move(rows)));
    const int kd = static_cast<int>(kernel.vectors.size());

    std::vector<int> layer_count(static_cast<size_t>(shape.layer_count()), 0);
    for (int idx : members) {
        const Point& p = space.cells[static_cast<size_t>(idx)];
        for (int i = 0; i < shape.dim(); ++i)
            ++layer_count[static_cast<size_t>(shape.layer_index({i, p[i]}))];
    }
    int empty_layers = 0;
    for (int c : layer_count) empty_layers += c == 0;

    long long zeros = space.k;
    if (kd == 1) {
        zeros = 0;
        for (const Int& v : kernel.vectors[0]) zeros += v == 0;
    }
    const long long kd_gap = kd >= 1 ? kd - 1 : 1;
    return 10000 * kd_gap + 100 * empty_layers + zeros;
}

}  // namespace

SearchReport random_search(int n, int d, int k, std::uint64_t seed,
                           std::uint64_t budget, int jobs) {
    const GridShape shape = GridShape::uniform(d, n);
    if (jobs < 1) throw ValueError("jobs must be at least 1");
    const long long n_cells = shape.cell_count();
    if (k < 1 || k > n_cells)
        throw ValueError("subset size must lie in [1, " +
                         std::to_string(n_cells) + "]");

    LocalSearchSpace space;
    space.shape = shape;
    space.k = k;
    space.cells = all_cells(shape);
    const int cell_total = static_cast<int>(space.cells.size());
    const int layers = shape.layer_count();

    const std::uint64_t per_restart =
        std::max<std::uint64_t>(400, 50 * static_cast<std::uint64_t>(k));
    const std::uint64_t restarts = std::max<std::uint64_t>(1, budget / per_restart);

    // Precompute a staircase template for structured restarts.
    std::vector<int> staircase_indices;
    if (n >= 2 && d >= 2 && k >= 2 * n) {
        const PointSet stairs = staircase_set(n, d).set;
        for (const Point& p : stairs.points()) {
            const auto it =
                std::lower_bound(space.cells.begin(), space.cells.end(), p);
            staircase_indices.push_back(static_cast<int>(it - space.cells.begin()));
        }
    }

    auto restart_body = [&](std::uint64_t r, ClassAccumulator& acc) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(r)));

        std::vector<int> members;
        std::vector<char> in_set(static_cast<size_t>(cell_total), 0);
        auto add_member = [&](int idx) {
            members.push_back(idx);
            in_set[static_cast<size_t>(idx)] = 1;
        };

        if (r % 2 == 1 && !staircase_indices.empty()) {
            // Structured restart: a random symmetry image of the staircase
            // plus random extra cells.
            std::vector<int> axis_perm(static_cast<size_t>(d));
            std::iota(axis_perm.begin(), axis_perm.end(), 0);
            shuffle_deterministic(axis_perm, rng);
            std::vector<std::vector<int>> vperms;
            for (int i = 0; i < d; ++i) {
                std::vector<int> vp(static_cast<size_t>(n));
                std::iota(vp.begin(), vp.end(), 1);
                shuffle_deterministic(vp, rng);
                vperms.push_back(std::move(vp));
            }
            const PointSet image = apply_symmetry(
                PointSet::from_sorted_unique(
                    shape,
                    [&] {
                        std::vector<Point> pts;
                        for (int idx : staircase_indices)
                            pts.push_back(space.cells[static_cast<size_t>(idx)]);
                        return pts;
                    }()),
                axis_perm, vperms);
            for (const Point& p : image.points()) {
                const auto it =
                    std::lower_bound(space.cells.begin(), space.cells.end(), p);
                add_member(static_cast<int>(it - space.cells.begin()));
            }
        } else {
            // Greedy cover: prefer cells that hit many uncovered layers.
            std::vector<int> order(static_cast<size_t>(cell_total));
            std::iota(order.begin(), order.end(), 0);
            shuffle_deterministic(order, rng);
            std::vector<char> covered(static_cast<size_t>(layers), 0);
            int uncovered = layers;
            while (static_cast<int>(members.size()) < k && uncovered > 0) {
                int best_idx = -1;
                int best_gain = -1;
                for (int idx : order) {
                    if (in_set[static_cast<size_t>(idx)]) continue;
                    const Point& p = space.cells[static_cast<size_t>(idx)];
                    int gain = 0;
                    for (int i = 0; i < d; ++i)
                        gain += !covered[static_cast<size_t>(shape.layer_index({i, p[i]}))];
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_idx = idx;
                    }
                }
                if (best_idx < 0 || best_gain == 0) break;
                add_member(best_idx);
                const Point& p = space.cells[static_cast<size_t>(best_idx)];
                for (int i = 0; i < d; ++i) {
                    const size_t l =
                        static_cast<size_t>(shape.layer_index({i, p[i]}));
                    if (!covered[l]) {
                        covered[l] = 1;
                        --uncovered;
                    }
                }
            }
        }
        {
            // Top up with random unused cells.
            std::vector<int> order(static_cast<size_t>(cell_total));
            std::iota(order.begin(), order.end(), 0);
            shuffle_deterministic(order, rng);
            for (int idx : order) {
                if (static_cast<int>(members.size()) >= k) break;
                if (!in_set[static_cast<size_t>(idx)]) add_member(idx);
            }
        }
        while (static_cast<int>(members.size()) > k) {
            in_set[static_cast<size_t>(members.back())] = 0;
            members.pop_back();
        }

        std::uint64_t evals = 0;
        long long cost = candidate_cost(space, members);
        ++evals;
        long long sideways_left = 3 * k;

        while (evals < per_restart) {
            if (cost == 0) {
                std::vector<Point> pts;
                for (int idx : members)
                    pts.push_back(space.cells[static_cast<size_t>(idx)]);
                std::sort(pts.begin(), pts.end());
                PointSet m = PointSet::from_sorted_unique(shape, std::move(pts));
                if (verify_witness(m, /*need_covering=*/true)) acc.add(m);
                return;
            }
            // First-improvement scan over single-point swaps.
            std::vector<int> outs(members.size());
            std::iota(outs.begin(), outs.end(), 0);
            shuffle_deterministic(outs, rng);
            std::vector<int> ins;
            ins.reserve(static_cast<size_t>(cell_total - k));
            for (int idx = 0; idx < cell_total; ++idx)
                if (!in_set[static_cast<size_t>(idx)]) ins.push_back(idx);
            shuffle_deterministic(ins, rng);

            bool moved = false;
            int side_out = -1, side_in = -1;
            for (size_t oi = 0; oi < outs.size() && !moved && evals < per_restart; ++oi) {
                const int pos = outs[oi];
                const int old_idx = members[static_cast<size_t>(pos)];
                for (int in_idx : ins) {
                    if (evals >= per_restart) break;
                    members[static_cast<size_t>(pos)] = in_idx;
                    const long long c = candidate_cost(space, members);
                    ++evals;
                    if (c < cost) {
                        cost = c;
                        in_set[static_cast<size_t>(old_idx)] = 0;
                        in_set[static_cast<size_t>(in_idx)] = 1;
                        moved = true;
                        break;
                    }
                    if (c == cost && side_out < 0) {
                        side_out = pos;
                        side_in = in_idx;
                    }
                    members[static_cast<size_t>(pos)] = old_idx;
                }
            }
            if (!moved) {
                if (side_out >= 0 && sideways_left > 0) {
                    const int old_idx = members[static_cast<size_t>(side_out)];
                    members[static_cast<size_t>(side_out)] = side_in;
                    in_set[static_cast<size_t>(old_idx)] = 0;
                    in_set[static_cast<size_t>(side_in)] = 1;
                    --sideways_left;
                } else {
                    return;  // local optimum
                }
            }
        }
    };

    const int worker_count = std::max(1, jobs);
    std::vector<ClassAccumulator> results(static_cast<size_t>(worker_count));
    auto run_worker = [&](int w) {
        for (std::uint64_t r = static_cast<std::uint64_t>(w); r < restarts;
             r += static_cast<std::uint64_t>(worker_count))
            restart_body(r, results[static_cast<size_t>(w)]);
    };
    if (worker_count == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < worker_count; ++w)
            threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }
    ClassAccumulator merged;
    for (auto& acc : results) merged.merge(std::move(acc));

    SearchReport report;
    report.grid = shape;
    report.mode = "random";
    report.layer_covering = true;
    report.seed = seed;
    report.budget = budget;
    report.jobs = jobs;
    report.sizes.emplace_back();
    report.sizes.back().size = k;
    finish_size_report(report.sizes.back(), merged, shape, /*covering=*/true);
    return report;
}

ConjectureResult check_conjecture(const PointSet& m) {
    const GridShape& shape = m.shape();
    if (shape.dim() != 3)
        throw ValueError("conjecture check needs d = 3, got d = " +
                         std::to_string(shape.dim()));
    if (!shape.is_uniform())
        throw ValueError("conjecture check needs a uniform grid");
    if (!covers_all_layers(m))
        throw ValueError("conjecture check needs a set meeting every layer");
    if (!is_minimal_nonbasic(m))
        throw ValueError("conjecture check needs a minimal non-basic set");

    const WeightFunction f = irreducible_annihilation(m);
    ConjectureResult result;
    result.sum_abs = 0;
    for (const Rat& v : f.values()) result.sum_abs += abs(v.get_num());
    result.rhs = 2 * (Int(m.size()) - Int(shape.uniform_side()));
    result.holds = result.sum_abs == result.rhs;
    return result;
}

SearchReport reachability_report(int n, int d, std::uint64_t seed,
                                 std::uint64_t budget, int jobs) {
    if (d < 2) throw ValueError("reachability needs d >= 2");
    if (n < 2) throw ValueError("reachability needs n >= 2");
    const GridShape shape = GridShape::uniform(d, n);

    SearchReport report;
    report.grid = shape;
    report.mode = "reachability";
    report.layer_covering = true;
    report.seed = seed;
    report.budget = budget;
    report.jobs = jobs;

    const int lo = 2 * n;
    const int hi = d * n - (d - 2);
    for (int k = lo; k <= hi; ++k) {
        if (shape.cell_count() <= 27) {
            SearchReport part = enumerate_minimal_nonbasic(n, d, k, true, false, jobs);
            report.sizes.push_back(std::move(part.sizes.front()));
            continue;
        }
        SizeReport entry;
        entry.size = k;
        ClassAccumulator acc;
        if (k == 2 * n) {
            // The staircase family realizes the lower bound directly.
            const PointSet stairs = staircase_set(n, d).set;
            if (verify_witness(stairs, /*need_covering=*/true)) acc.add(stairs);
        }
        if (acc.classes.empty()) {
            SearchReport part =
                random_search(n, d, k, splitmix64(seed + static_cast<std::uint64_t>(k)),
                              budget, jobs);
            report.sizes.push_back(std::move(part.sizes.front()));
            continue;
        }
        finish_size_report(entry, acc, shape, /*covering=*/true);
        report.sizes.push_back(std::move(entry));
    }
    return report;
}

}  // namespace gridbasis
