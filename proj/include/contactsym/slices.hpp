#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "contactsym/decomposition.hpp"
#include "contactsym/linalg.hpp"

namespace contactsym {

/// Anisotropic degree with q, p, xi_q, xi_p counting 1, t counting 2 and
/// xi_t counting 0. Both X and i(alpha) preserve it exactly, so symbols of
/// fixed fiber degree and fixed weighted degree form finite-dimensional
/// invariant slices on which rank statements can be settled by exact
/// linear algebra. A monomial of base degree b has weighted degree between
/// b and 2b + k, so the slices with w <= 2B + k cover everything of base
/// degree <= B.
inline int weighted_degree(const Monomial& m, int n) {
    int w = 0;
    for (int i = 0; i < 2 * n; ++i) w += m.exps[i];         // q, p
    w += 2 * m.exps[t_var(n)];                              // t
    for (int i = 0; i < 2 * n; ++i) w += m.exps[2 * n + 1 + i];  // xi_q, xi_p
    return w;                                               // xi_t counts 0
}

/// Multigrade (g_1..g_n, g_t) with g_i the total q^i/p^i/xi_{q^i}/xi_{p^i}
/// degree and g_t twice the t degree; i(alpha) preserves every component,
/// which blocks its kernel computations.
inline std::vector<int> multigrade(const Monomial& m, int n) {
    std::vector<int> g(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        g[i] = m.exps[q_var(n, i)] + m.exps[p_var(n, i)] + m.exps[xi_q_var(n, i)] +
               m.exps[xi_p_var(n, i)];
    }
    g[n] = 2 * m.exps[t_var(n)];
    return g;
}

/// All monomials of fiber degree k and weighted degree w, with index maps
/// for exact matrix work.
struct SliceBasis {
    int n = 0, k = 0, w = 0;
    std::vector<Monomial> monomials;                 // grlex order
    std::map<Monomial, int, GrlexLess> index;
    std::map<std::vector<int>, std::vector<int>> blocks;  // multigrade -> indices

    int dim() const { return static_cast<int>(monomials.size()); }

    SparseVec to_vec(const Poly& p) const {
        SparseVec v;
        for (const auto& [m, c] : p.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw DomainError("polynomial leaves the slice");
            v.emplace(it->second, c);
        }
        return v;
    }

    Poly to_poly(const SparseVec& v) const {
        Poly p(n);
        for (const auto& [i, c] : v) p.add_term(monomials[i], c);
        return p;
    }
};

inline SliceBasis slice_basis(int n, int k, int w) {
    if (k < 0 || w < 0) throw DomainError("slice needs k, w >= 0");
    SliceBasis out;
    out.n = n;
    out.k = k;
    out.w = w;
    std::vector<int> exps(num_vars(n), 0);
    int nb = num_base_vars(n);

    std::function<void(int, int)> fill_base;  // distribute weighted degree over base vars
    std::function<void(int, int)> fill_fiber;

    fill_base = [&](int var, int remaining) {
        if (var == nb - 1) {  // t carries weight 2
            if (remaining % 2 != 0) return;
            exps[var] = remaining / 2;
            out.monomials.push_back(Monomial{exps});
            exps[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            fill_base(var + 1, remaining - e);
        }
        exps[var] = 0;
    };

    fill_fiber = [&](int var, int remaining) {
        if (var == num_vars(n) - 1) {  // xi_t carries weight 0
            exps[var] = remaining;
            int fiber_wt = k - remaining;  // xi_q/xi_p exponents total
            int base_wt = w - fiber_wt;
            if (base_wt >= 0) fill_base(0, base_wt);
            exps[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            fill_fiber(var + 1, remaining - e);
        }
        exps[var] = 0;
    };

    fill_fiber(nb, k);
    std::sort(out.monomials.begin(), out.monomials.end(),
              [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    for (int i = 0; i < out.dim(); ++i) {
        out.index.emplace(out.monomials[i], i);
        out.blocks[multigrade(out.monomials[i], n)].push_back(i);
    }
    return out;
}

/// Kernel of i(alpha)^l on the slice, computed block by block over the
/// conserved multigrade. Vectors are indexed against `src`.
inline std::vector<SparseVec> slice_kernel_ialpha_power(const SliceBasis& src, int l) {
    std::vector<SparseVec> out;
    if (l == 0) return out;  // ker Id = 0
    SliceBasis tgt = slice_basis(src.n, src.k - l >= 0 ? src.k - l : 0, src.w);
    const bool drained = src.k - l < 0;  // i(alpha)^l == 0 identically
    for (const auto& [grade, cols] : src.blocks) {
        std::vector<int> rows;
        if (!drained) {
            auto it = tgt.blocks.find(grade);
            if (it != tgt.blocks.end()) rows = it->second;
        }
        std::map<int, int> row_of;  // global tgt index -> local row
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_of[rows[i]] = i;
        RMat m(rows.size(), RVec(cols.size(), Rational(0)));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            Symbol s(src.n, Weight{Rational(0)}, Grading::R,
                     Poly::from_term(src.n, src.monomials[cols[j]], Rational(1)));
            for (int step = 0; step < l; ++step) s = i_alpha(s);
            if (drained || s.is_zero()) continue;
            for (const auto& [mono, c] : s.poly.terms()) {
                int gi = tgt.index.at(mono);
                m[row_of.at(gi)][j] = c;
            }
        }
        for (const RVec& kvec : kernel_basis(std::move(m), static_cast<int>(cols.size()))) {
            SparseVec v;
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                if (kvec[j] != 0) v.emplace(cols[j], kvec[j]);
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// Applies X^m with weight label delta to a slice vector; the image is
/// expressed against `dst` (same weighted degree, fiber degree + m).
inline SparseVec slice_apply_X_power(const SliceBasis& src, const SliceBasis& dst,
                                     const SparseVec& v, int m, const Rational& delta) {
    Symbol s(src.n, Weight{delta}, Grading::R, src.to_poly(v));
    for (int step = 0; step < m; ++step) s = big_X_mixed(s);
    return dst.to_vec(s.poly);
}

/// Exact rank accounting for F^{k,l} = F^{k,l-1} ⊕ X^{l-1}(F^{k-l+1,1}) on
/// one graded slice.
struct SplittingCheck {
    int n, k, l, w;
    Rational delta;
    bool applicable = true;  // false when prod_{j<l} r(j, k-l+1) vanishes
    bool pass = false;
    int dim_fkl = 0;      // dim F^{k,l} on the slice
    int dim_fkl1 = 0;     // dim F^{k,l-1} on the slice
    int dim_image = 0;    // dim X^{l-1}(F^{k-l+1,1}) on the slice
};

/// Weight-independent part of the splitting data for one (n, k, l, w)
/// cell: the filtration kernels on the graded slice. Reusable across the
/// delta panel, where only the X^{l-1} image changes.
struct SplittingSlice {
    int n, k, l, w;
    SliceBasis top, low;
    std::vector<SparseVec> f_kl, f_kl1, f_low1;
};

inline SplittingSlice prepare_splitting_slice(int n, int k, int l, int w) {
    if (k < 1 || l < 2 || l > k + 1)
        throw DomainError("splitting check needs k >= 1, 2 <= l <= k+1");
    SplittingSlice s{n, k, l, w, slice_basis(n, k, w), slice_basis(n, k - l + 1, w), {}, {}, {}};
    s.f_kl = slice_kernel_ialpha_power(s.top, l);
    s.f_kl1 = slice_kernel_ialpha_power(s.top, l - 1);
    s.f_low1 = slice_kernel_ialpha_power(s.low, 1);
    return s;
}

inline SplittingCheck check_filtration_splitting(const SplittingSlice& s, const Rational& delta) {
    SplittingCheck out{s.n, s.k, s.l, s.w, delta};
    StructureConstants sc{s.n, delta};
    for (int j = 1; j <= s.l - 1; ++j)
        if (sc.r(j, s.k - s.l + 1) == 0) out.applicable = false;
    if (!out.applicable) return out;

    out.dim_fkl = static_cast<int>(s.f_kl.size());
    out.dim_fkl1 = static_cast<int>(s.f_kl1.size());

    SparseEliminator membership;  // span of F^{k,l} for containment tests
    for (const auto& v : s.f_kl) membership.add(v);

    SparseEliminator sum;
    for (const auto& v : s.f_kl1) {
        if (!membership.in_span(v)) return out;  // F^{k,l-1} sits inside F^{k,l}
        if (!sum.add(v)) return out;             // kernel basis must be independent
    }
    for (const auto& v : s.f_low1) {
        SparseVec img = slice_apply_X_power(s.low, s.top, v, s.l - 1, delta);
        if (!membership.in_span(img)) return out;  // image must stay in F^{k,l}
        if (!sum.add(img)) return out;             // and meet F^{k,l-1} trivially
        ++out.dim_image;
    }
    out.pass = sum.rank() == out.dim_fkl && out.dim_fkl == out.dim_fkl1 + out.dim_image;
    return out;
}

inline SplittingCheck check_filtration_splitting(int n, int k, int l, int w,
                                                 const Rational& delta) {
    return check_filtration_splitting(prepare_splitting_slice(n, k, l, w), delta);
}

/// Slice-level surjectivity of i(alpha): R^k -> R^{k-1}; the matrix does
/// not involve the weight, so this witnesses surjectivity at every delta
/// including the singular ones.
inline bool check_ialpha_surjective_on_slice(int n, int k, int w) {
    if (k < 1) throw DomainError("surjectivity check needs k >= 1");
    SliceBasis src = slice_basis(n, k, w);
    SliceBasis tgt = slice_basis(n, k - 1, w);
    for (const auto& [grade, rows] : tgt.blocks) {
        auto it = src.blocks.find(grade);
        if (it == src.blocks.end()) return false;
        const std::vector<int>& cols = it->second;
        std::map<int, int> row_of;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_of[rows[i]] = i;
        RMat m(rows.size(), RVec(cols.size(), Rational(0)));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            Symbol s(n, Weight{Rational(0)}, Grading::R,
                     Poly::from_term(n, src.monomials[cols[j]], Rational(1)));
            s = i_alpha(s);
            for (const auto& [mono, c] : s.poly.terms())
                m[row_of.at(tgt.index.at(mono))][j] = c;
        }
        if (rank(std::move(m)) != static_cast<int>(rows.size())) return false;
    }
    return true;
}

}  // namespace contactsym
