#pragma once

#include <optional>

#include "gring/cyclotomic.hpp"

namespace gring {

// Deterministic exact linear algebra over Q(zeta_k). All entries of a
// matrix share one conductor. Pivoting is "first nonzero in column order"
// and pivot rows are normalized immediately, so the reduced echelon form
// is the canonical one: two subspaces are equal iff their bases compare
// equal row by row.

struct MatCyc {
    size_t rows = 0, cols = 0;
    int k = 1;
    std::vector<Cyc> entries;  // row-major

    MatCyc() = default;
    MatCyc(size_t r, size_t c, int conductor)
        : rows(r), cols(c), k(conductor), entries(r * c, Cyc(rat(0)).embedded(conductor)) {}

    Cyc& at(size_t i, size_t j) { return entries[i * cols + j]; }
    const Cyc& at(size_t i, size_t j) const { return entries[i * cols + j]; }

    static MatCyc identity(size_t n, int conductor) {
        MatCyc m(n, n, conductor);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc(rat(1)).embedded(conductor);
        return m;
    }
};

using VecCyc = std::vector<Cyc>;

struct SubspaceBasis {
    size_t ambient = 0;
    int k = 1;
    std::vector<VecCyc> rows;    // reduced row-echelon, pivots normalized to 1
    std::vector<size_t> pivots;  // pivot column of each row, strictly increasing top-down?

    size_t dim() const { return rows.size(); }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        if (a.ambient != b.ambient || a.rows.size() != b.rows.size()) return false;
        for (size_t i = 0; i < a.rows.size(); ++i)
            for (size_t j = 0; j < a.ambient; ++j)
                if (!(a.rows[i][j] == b.rows[i][j])) return false;
        return true;
    }
};

namespace detail {

// Incremental reduced echelon accumulator. Rows are inserted one at a
// time, reduced against the current pivots, normalized and back-substituted
// so the state stays fully reduced. Deterministic by construction.
class RrefBuilder {
public:
    RrefBuilder(size_t ambient, int k) : ambient_(ambient), k_(k) {}

    // returns true if the row added to the span (i.e. was independent)
    bool insert(VecCyc row) {
        reduce(row);
        size_t lead = ambient_;
        for (size_t j = 0; j < ambient_; ++j) {
            if (!row[j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == ambient_) return false;
        Cyc inv = row[lead].inv();
        for (size_t j = lead; j < ambient_; ++j)
            if (!row[j].is_zero()) row[j] = row[j] * inv;
        row[lead] = Cyc(rat(1)).embedded(k_);
        // back-eliminate the new pivot column from existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            Cyc c = rows_[r][lead];
            if (c.is_zero()) continue;
            for (size_t j = lead; j < ambient_; ++j)
                if (!row[j].is_zero()) rows_[r][j].submul(c, row[j]);
        }
        // insert keeping pivot columns sorted
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    // reduce an arbitrary vector against the current pivots
    void reduce(VecCyc& row) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Cyc c = row[pivots_[r]];
            if (c.is_zero()) continue;
            const VecCyc& pr = rows_[r];
            for (size_t j = pivots_[r]; j < ambient_; ++j)
                if (!pr[j].is_zero()) row[j].submul(c, pr[j]);
        }
    }

    bool member(VecCyc row) const {
        reduce(row);
        for (const auto& x : row)
            if (!x.is_zero()) return false;
        return true;
    }

    size_t rank() const { return rows_.size(); }

    SubspaceBasis take() {
        SubspaceBasis b;
        b.ambient = ambient_;
        b.k = k_;
        b.rows = std::move(rows_);
        b.pivots = std::move(pivots_);
        return b;
    }

    const std::vector<VecCyc>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

private:
    size_t ambient_;
    int k_;
    std::vector<VecCyc> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace detail

inline std::pair<SubspaceBasis, size_t> rref(const MatCyc& M) {
    detail::RrefBuilder b(M.cols, M.k);
    for (size_t i = 0; i < M.rows; ++i) {
        VecCyc row(M.entries.begin() + i * M.cols, M.entries.begin() + (i + 1) * M.cols);
        b.insert(std::move(row));
    }
    size_t r = b.rank();
    return {b.take(), r};
}

inline size_t rank(const MatCyc& M) { return rref(M).second; }

// Some exact solution of A x = b (free variables zero), or nullopt.
inline std::optional<VecCyc> solve_particular(const MatCyc& A, const VecCyc& b) {
    if (b.size() != A.rows) throw std::invalid_argument("dimension mismatch");
    detail::RrefBuilder acc(A.cols + 1, A.k);
    for (size_t i = 0; i < A.rows; ++i) {
        VecCyc row(A.cols + 1, Cyc(rat(0)).embedded(A.k));
        for (size_t j = 0; j < A.cols; ++j) row[j] = A.at(i, j);
        row[A.cols] = b[i].embedded(A.k);
        acc.insert(std::move(row));
    }
    VecCyc x(A.cols, Cyc(rat(0)).embedded(A.k));
    for (size_t r = 0; r < acc.rank(); ++r) {
        size_t p = acc.pivots()[r];
        if (p == A.cols) return std::nullopt;  // pivot in the augmented column
        x[p] = acc.rows()[r][A.cols];
    }
    return x;
}

// basis of {x : A x = 0}
inline SubspaceBasis nullspace(const MatCyc& A) {
    auto [basis, r] = rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (size_t p : basis.pivots) is_pivot[p] = true;
    detail::RrefBuilder out(A.cols, A.k);
    for (size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        VecCyc v(A.cols, Cyc(rat(0)).embedded(A.k));
        v[f] = Cyc(rat(1)).embedded(A.k);
        for (size_t r2 = 0; r2 < basis.rows.size(); ++r2)
            v[basis.pivots[r2]] = -basis.rows[r2][f];
        out.insert(std::move(v));
    }
    return out.take();
}

inline bool subspace_equal(const SubspaceBasis& U, const SubspaceBasis& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("ambient mismatch");
    return U == V;
}

inline bool member(const VecCyc& x, const SubspaceBasis& U) {
    if (x.size() != U.ambient) throw std::invalid_argument("ambient mismatch");
    detail::RrefBuilder b(U.ambient, U.k);
    for (const auto& r : U.rows) b.insert(VecCyc(r));
    VecCyc copy;
    copy.reserve(x.size());
    for (const auto& c : x) copy.push_back(c.embedded(U.k));
    return b.member(std::move(copy));
}

inline SubspaceBasis subspace_sum(const SubspaceBasis& U, const SubspaceBasis& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("ambient mismatch");
    detail::RrefBuilder b(U.ambient, U.k);
    for (const auto& r : U.rows) b.insert(VecCyc(r));
    for (const auto& r : V.rows) {
        VecCyc copy;
        copy.reserve(r.size());
        for (const auto& c : r) copy.push_back(c.embedded(U.k));
        b.insert(std::move(copy));
    }
    return b.take();
}

// Zassenhaus: reduce rows [u | u] and [v | 0]; rows with zero left half
// carry an intersection basis in the right half.
inline SubspaceBasis subspace_intersect(const SubspaceBasis& U, const SubspaceBasis& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("ambient mismatch");
    size_t n = U.ambient;
    detail::RrefBuilder b(2 * n, U.k);
    for (const auto& r : U.rows) {
        VecCyc row(2 * n, Cyc(rat(0)).embedded(U.k));
        for (size_t j = 0; j < n; ++j) {
            row[j] = r[j];
            row[n + j] = r[j];
        }
        b.insert(std::move(row));
    }
    for (const auto& r : V.rows) {
        VecCyc row(2 * n, Cyc(rat(0)).embedded(U.k));
        for (size_t j = 0; j < n; ++j) row[j] = r[j].embedded(U.k);
        b.insert(std::move(row));
    }
    detail::RrefBuilder out(n, U.k);
    for (size_t r = 0; r < b.rank(); ++r) {
        if (b.pivots()[r] < n) continue;
        VecCyc tail(b.rows()[r].begin() + n, b.rows()[r].end());
        out.insert(std::move(tail));
    }
    return out.take();
}

}  // namespace gring
