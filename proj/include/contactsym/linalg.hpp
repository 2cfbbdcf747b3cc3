#pragma once

#include <map>
#include <vector>

#include "contactsym/rational.hpp"

namespace contactsym {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // row-major

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(RMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RMat m) { return static_cast<int>(rref(m).size()); }

/// Basis of { x : A x = 0 } for A given as rows of equations.
inline std::vector<RVec> kernel_basis(RMat a, int cols) {
    if (!a.empty()) cols = static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RVec> out;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RVec v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (r < a.size()) v[pivots[r]] = -a[r][c];
        out.push_back(std::move(v));
    }
    return out;
}

using SparseVec = std::map<int, Rational>;

/// Incremental Gaussian elimination over sparse columns; tracks the rank
/// of everything fed to it and answers span-membership queries.
class SparseEliminator {
public:
    /// Reduces v against the recorded pivots; records a new pivot if
    /// anything is left. Returns true when v enlarged the span.
    bool add(SparseVec v) {
        reduce(v);
        if (v.empty()) return false;
        auto lead = v.begin();
        Rational inv = Rational(1) / lead->second;
        int idx = lead->first;
        for (auto& [i, c] : v) c *= inv;
        pivots_.emplace(idx, std::move(v));
        return true;
    }

    bool in_span(SparseVec v) const {
        reduce(v);
        return v.empty();
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // Forward elimination: pivot columns only touch indices at or after
    // their leading index, so a single ascending scan suffices.
    void reduce(SparseVec& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            int idx = it->first;
            Rational f = it->second;
            axpy(v, -f, p->second);
            it = v.lower_bound(idx);
        }
    }

    static void axpy(SparseVec& v, const Rational& f, const SparseVec& w) {
        for (const auto& [i, c] : w) {
            auto it = v.find(i);
            if (it == v.end()) {
                Rational val = f * c;
                if (val != 0) v.emplace(i, std::move(val));
            } else {
                it->second += f * c;
                if (it->second == 0) v.erase(it);
            }
        }
    }

    std::map<int, SparseVec> pivots_;  // leading index -> normalized column
};

}  // namespace contactsym
