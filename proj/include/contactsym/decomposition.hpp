#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contactsym/operators.hpp"

namespace contactsym {

// ---------------------------------------------------------------------------
// Singular weights
// ---------------------------------------------------------------------------

/// I_k = { -p / (2(n+1)) : p in {k-1, ..., 2k-2} }, the weights at which
/// the projector onto R^k ∩ ker i(alpha) does not exist in X/i(alpha) form.
inline std::vector<Rational> singular_set(int k, int n) {
    if (k < 1) throw DomainError("singular_set needs k >= 1");
    std::vector<Rational> out;
    out.reserve(k);
    for (int p = k - 1; p <= 2 * k - 2; ++p)
        out.push_back(Rational(-p, 2 * (n + 1)));
    return out;
}

struct SingularReport {
    int k;
    int n;
    Rational delta;
    bool singular;
    std::vector<int> witnesses;  // the p values with delta = -p/(2(n+1))

    std::string str() const {
        std::string s = "delta = " + to_string(delta) + (singular ? " is" : " is not") +
                        " singular for k = " + std::to_string(k) + ", n = " + std::to_string(n);
        if (singular) {
            s += " (p =";
            for (int p : witnesses) s += " " + std::to_string(p);
            s += ")";
        }
        return s;
    }
};

/// Eager membership test of delta in I_k.
inline SingularReport check_singular(int k, const StructureConstants& sc) {
    SingularReport rep{k, sc.n, sc.delta, false, {}};
    if (k < 1) return rep;
    for (int p = k - 1; p <= 2 * k - 2; ++p) {
        if (sc.delta == Rational(-p, 2 * (sc.n + 1))) {
            rep.singular = true;
            rep.witnesses.push_back(p);
        }
    }
    return rep;
}

class SingularWeightError : public Error {
public:
    explicit SingularWeightError(SingularReport rep)
        : Error("singular weight: " + rep.str()), report_(std::move(rep)) {}

    const SingularReport& report() const { return report_; }

private:
    SingularReport report_;
};

// ---------------------------------------------------------------------------
// The coefficients b_{k,l} and c(l, m)
// ---------------------------------------------------------------------------

namespace detail {

// Eager I_k test plus lazy per-factor test over all j = 1..k; the two
// detections must agree, anything else is a transcription bug.
inline void require_nonsingular(int k, const StructureConstants& sc) {
    SingularReport rep = check_singular(k, sc);
    bool factor_vanishes = false;
    for (int j = 1; j <= k; ++j)
        if (sc.r(j, k - j) == 0) factor_vanishes = true;
    if (rep.singular != factor_vanishes)
        throw Error("internal: singular-set membership and vanishing r factors disagree for " +
                    rep.str());
    if (rep.singular) throw SingularWeightError(std::move(rep));
}

}  // namespace detail

/// b_{k,l} = (prod_{j=1}^{l} -r(j, k-j))^{-1}, defined for delta outside I_k.
inline Rational coeff_b(int k, int l, const StructureConstants& sc) {
    if (l < 1 || l > k) throw DomainError("coeff_b needs 1 <= l <= k");
    detail::require_nonsingular(k, sc);
    Rational prod(1);
    for (int j = 1; j <= l; ++j) prod *= -sc.r(j, k - j);
    return Rational(1) / prod;
}

/// c(l, m) = (prod_{i=1}^{l} r(i, m))^{-1}; the scalar relating s^l and X^l
/// on kernels (m plays the role of k-l). c(0, m) = 1.
inline Rational coeff_c(int l, int m, const StructureConstants& sc) {
    if (l < 0 || m < 0) throw DomainError("coeff_c needs l, m >= 0");
    Rational prod(1);
    for (int i = 1; i <= l; ++i) {
        Rational f = sc.r(i, m);
        if (f == 0) {
            SingularReport rep{l + m, sc.n, sc.delta, true, {2 * m + i - 1}};
            throw SingularWeightError(std::move(rep));
        }
        prod *= f;
    }
    return Rational(1) / prod;
}

// ---------------------------------------------------------------------------
// Projector and section
// ---------------------------------------------------------------------------

namespace detail {

inline void check_r_graded_degree(const Symbol& u, int k, const StructureConstants& sc,
                                  const char* who) {
    if (u.n != sc.n) throw DimensionError(std::string(who) + ": symbol has wrong n");
    if (u.grading != Grading::R) throw GradingError(std::string(who) + ": R grading required");
    if (u.weight.value != sc.delta)
        throw GradingError(std::string(who) + ": symbol weight differs from the operator's delta");
    if (!u.is_zero() && u.fiber_degree() != k)
        throw DomainError(std::string(who) + ": expected fiber degree " + std::to_string(k));
}

}  // namespace detail

/// p_k = Id + sum_{l=1}^{k} b_{k,l} X^l ∘ i(alpha)^l, the projector from
/// R^k onto R^k ∩ ker i(alpha). Construction fails on singular weights.
class Projector {
public:
    Projector(int k, StructureConstants sc) : k_(k), sc_(std::move(sc)) {
        if (k < 0) throw DomainError("projector needs k >= 0");
        detail::require_nonsingular(k, sc_);
        b_.reserve(k);
        for (int l = 1; l <= k; ++l) b_.push_back(coeff_b(k, l, sc_));
    }

    /// Same shape with explicit coefficients; lets tests corrupt b_{k,l}
    /// and watch the projector laws break.
    static Projector with_coefficients(int k, StructureConstants sc, std::vector<Rational> b) {
        Projector p(k, std::move(sc));
        if (static_cast<int>(b.size()) != k) throw DimensionError("expected k coefficients");
        p.b_ = std::move(b);
        return p;
    }

    int k() const { return k_; }
    const StructureConstants& constants() const { return sc_; }
    const std::vector<Rational>& coefficients() const { return b_; }

    Symbol operator()(const Symbol& u) const {
        detail::check_r_graded_degree(u, k_, sc_, "projector");
        Symbol acc = u;
        Symbol peeled = u;
        for (int l = 1; l <= k_; ++l) {
            peeled = i_alpha(peeled);  // i(alpha)^l u
            Symbol raised = peeled;
            for (int j = 0; j < l; ++j) raised = big_X(raised);
            acc.poly += b_[l - 1] * raised.poly;
        }
        return acc;
    }

private:
    int k_;
    StructureConstants sc_;
    std::vector<Rational> b_;
};

inline Projector projector_p(int k, const StructureConstants& sc) { return Projector(k, sc); }

/// s_{k-1} = -sum_{l=1}^{k} b_{k,l} X^l ∘ i(alpha)^{l-1} : R^{k-1} -> R^k,
/// the invariant right inverse of i(alpha).
class Section {
public:
    Section(int k_minus_1, StructureConstants sc) : k1_(k_minus_1), sc_(std::move(sc)) {
        if (k_minus_1 < 0) throw DomainError("section needs k-1 >= 0");
        int k = k1_ + 1;
        detail::require_nonsingular(k, sc_);
        b_.reserve(k);
        for (int l = 1; l <= k; ++l) b_.push_back(coeff_b(k, l, sc_));
    }

    int domain_degree() const { return k1_; }
    const StructureConstants& constants() const { return sc_; }

    Symbol operator()(const Symbol& u) const {
        detail::check_r_graded_degree(u, k1_, sc_, "section");
        Symbol acc = Symbol::zero(u.n, u.weight, Grading::R);
        Symbol peeled = u;
        for (int l = 1; l <= k1_ + 1; ++l) {
            // peeled = i(alpha)^{l-1} u
            Symbol raised = peeled;
            for (int j = 0; j < l; ++j) raised = big_X(raised);
            acc.poly -= b_[l - 1] * raised.poly;
            if (l <= k1_) peeled = i_alpha(peeled);
        }
        return acc;
    }

private:
    int k1_;
    StructureConstants sc_;
    std::vector<Rational> b_;
};

inline Section section_s(int k_minus_1, const StructureConstants& sc) {
    return Section(k_minus_1, sc);
}

// ---------------------------------------------------------------------------
// Decomposition R^k = ⊕_l s^l (R^{k-l} ∩ ker i(alpha))
// ---------------------------------------------------------------------------

/// Kernel components u_l of a symbol: u_l lies in R^{k-l} ∩ ker i(alpha)
/// and sum_l s^l(u_l) reproduces the input exactly.
struct DecompositionResult {
    int k;
    StructureConstants sc;
    std::vector<Symbol> components;  // index l = 0..k; components[l] in R^{k-l}
};

/// Peels a fiber-homogeneous R-graded symbol top-down: project onto the
/// kernel, strip the projection, push down one degree with i(alpha),
/// repeat. Needs delta outside every I_j, j = 1..k; the error names the
/// first failing j.
inline DecompositionResult decompose(const Symbol& u) {
    if (u.grading != Grading::R) throw GradingError("decompose: R grading required");
    if (!u.is_fiber_homogeneous()) throw DomainError("decompose: fiber-homogeneous input required");
    int k = u.fiber_degree();
    StructureConstants sc{u.n, u.weight.value};
    for (int j = 1; j <= k; ++j) {
        SingularReport rep = check_singular(j, sc);
        if (rep.singular) throw SingularWeightError(std::move(rep));
    }
    DecompositionResult out{k, sc, {}};
    out.components.reserve(k + 1);
    Symbol cur = u;
    for (int l = 0; l <= k; ++l) {
        Projector p(k - l, sc);
        Symbol head = p(cur);
        out.components.push_back(head);
        if (l < k) {
            cur.poly -= head.poly;
            cur = i_alpha(cur);
        }
    }
    return out;
}

/// sum_l s^l(u_l), recomputing the sections freshly.
inline Symbol reconstruct(const DecompositionResult& d) {
    Symbol acc = Symbol::zero(d.sc.n, Weight{d.sc.delta}, Grading::R);
    for (int l = 0; l <= d.k; ++l) {
        Symbol w = d.components[l];
        for (int j = d.k - l; j <= d.k - 1; ++j) w = Section(j, d.sc)(w);
        acc.poly += w.poly;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The i(alpha) filtration F^{k,l} = R^k ∩ ker i(alpha)^l
// ---------------------------------------------------------------------------

struct FiltrationLevel {
    int k;
    int l;
};

/// Minimal l >= 0 with i(alpha)^l u = 0; at most k+1 on R^k.
inline FiltrationLevel filtration_level(const Symbol& u) {
    if (!u.is_fiber_homogeneous())
        throw DomainError("filtration_level: fiber-homogeneous input required");
    int k = u.fiber_degree();
    Symbol w = u;
    int l = 0;
    while (!w.is_zero()) {
        w = i_alpha(w);
        ++l;
    }
    return {k, l};
}

inline bool in_filtration(const Symbol& u, int l) {
    Symbol w = u;
    for (int i = 0; i < l; ++i) w = i_alpha(w);
    return w.is_zero();
}

/// Representative-level form of the graded identity
/// X~ ∘ i(alpha)~ = r(l-1, k-l+1) Id on gr^{k,l}: for u in F^{k,l},
/// X(i(alpha)u) - r(l-1,k-l+1) u must fall into F^{k,l-1}.
inline bool graded_inverse_check(const Symbol& u, int l) {
    if (l < 1) throw DomainError("graded_inverse_check needs l >= 1");
    if (!in_filtration(u, l)) throw DomainError("graded_inverse_check: u not in F^{k,l}");
    if (u.is_zero()) return true;
    int k = u.fiber_degree();
    StructureConstants sc{u.n, u.weight.value};
    Symbol v = big_X(i_alpha(u));
    v.poly -= sc.r(l - 1, k - l + 1) * u.poly;
    return in_filtration(v, l - 1);
}

}  // namespace contactsym
