#include "gridbasis/exactlin.hpp"

#include <stdexcept>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ValueError("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw ValueError("ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = std::move(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

std::vector<Int> ExactMatrix::row(int r) const {
    std::vector<Int> out(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(r, j);
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Exact division with a verification that the remainder vanishes. Bareiss
// guarantees divisibility (Sylvester's identity); a nonzero remainder would
// mean a broken invariant, not bad input.
Int div_exact(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("fraction-free elimination lost exactness");
    return q;
}

}  // namespace

Elimination bareiss_eliminate(const ExactMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    // Work on [A | I]; the augmented entries stay integers throughout.
    ExactMatrix w(m, n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n + i) = 1;
    }

    Elimination out;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot_row = -1;
        for (int r = row; r < m; ++r) {
            if (w.at(r, col) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int j = 0; j < n + m; ++j)
                swap(w.at(pivot_row, j), w.at(row, j));

        const Int pivot = w.at(row, col);
        for (int i = row + 1; i < m; ++i) {
            // The update applies to every row below, also where factor is 0:
            // the rescaling by pivot/prev keeps later divisions exact.
            const Int factor = w.at(i, col);
            for (int j = 0; j < n + m; ++j) {
                Int t = pivot * w.at(i, j) - factor * w.at(row, j);
                w.at(i, j) = div_exact(t, prev);
            }
        }
        out.pivots.emplace_back(row, col);
        prev = pivot;
        ++row;
    }
    out.rank = static_cast<int>(out.pivots.size());

    out.reduced = ExactMatrix(m, n);
    out.transform = ExactMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) out.reduced.at(i, j) = w.at(i, j);
        for (int j = 0; j < m; ++j) out.transform.at(i, j) = w.at(i, n + j);
    }
    return out;
}

int rank_exact(const ExactMatrix& a) { return bareiss_eliminate(a).rank; }

KernelBasis left_kernel_primitive(const ExactMatrix& a) {
    const Elimination e = bareiss_eliminate(a);
    KernelBasis basis;
    for (int i = e.rank; i < a.rows(); ++i) {
        std::vector<Int> v = e.transform.row(i);
        make_primitive(v);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

SolveOutcome solve_with_certificate(const ExactMatrix& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw ValueError("right-hand side has " + std::to_string(b.size()) +
                         " entries, expected " + std::to_string(a.rows()));
    const Elimination e = bareiss_eliminate(a);
    const int m = a.rows();
    const int n = a.cols();

    // tb = transform * b, so the reduced system reads reduced * x = tb.
    std::vector<Rat> tb(static_cast<size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat s(0);
        for (int j = 0; j < m; ++j) {
            if (e.transform.at(i, j) == 0) continue;
            s += Rat(e.transform.at(i, j)) * b[static_cast<size_t>(j)];
        }
        tb[static_cast<size_t>(i)] = s;
    }

    SolveOutcome out;
    for (int i = e.rank; i < m; ++i) {
        if (tb[static_cast<size_t>(i)] != 0) {
            std::vector<Int> cert = e.transform.row(i);
            make_primitive(cert);
            out.certificate = std::move(cert);
            return out;
        }
    }

    std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
    for (int k = e.rank - 1; k >= 0; --k) {
        const auto [r, c] = e.pivots[static_cast<size_t>(k)];
        Rat s = tb[static_cast<size_t>(r)];
        for (int j = c + 1; j < n; ++j) {
            if (e.reduced.at(r, j) == 0 || x[static_cast<size_t>(j)] == 0) continue;
            s -= Rat(e.reduced.at(r, j)) * x[static_cast<size_t>(j)];
        }
        x[static_cast<size_t>(c)] = s / Rat(e.reduced.at(r, c));
    }
    out.solution = std::move(x);
    return out;
}

std::optional<std::vector<Rat>> solve_exact(const ExactMatrix& a,
                                            const std::vector<Rat>& b) {
    return solve_with_certificate(a, b).solution;
}

}  // namespace gridbasis
