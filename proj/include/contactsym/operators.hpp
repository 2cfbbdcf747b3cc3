#pragma once

#include <functional>
#include <string>
#include <utility>

#include "contactsym/contact.hpp"
#include "contactsym/symbol.hpp"

namespace contactsym {

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

/// a(k, delta) = 2(n+1) delta - k, with delta the S-grading weight.
inline Rational const_a(int n, int k, const Rational& delta_s) {
    if (k < 0) throw DomainError("fiber degree must be >= 0");
    return Rational(2 * (n + 1)) * delta_s - Rational(k);
}

/// h_k = -((n+1) delta + k), with delta the R-grading weight.
inline Rational const_h(int n, int k, const Rational& delta_r) {
    if (k < 0) throw DomainError("fiber degree must be >= 0");
    return -(Rational(n + 1) * delta_r + Rational(k));
}

/// r(l, k) = -(l/2)(2(n+1) delta + 2k + l - 1), with delta the R-grading
/// weight.
inline Rational const_r(int n, int l, int k, const Rational& delta_r) {
    if (l < 0 || k < 0) throw DomainError("l and k must be >= 0");
    return -(Rational(l, 2) * (Rational(2 * (n + 1)) * delta_r + Rational(2 * k + l - 1)));
}

/// Bundles (n, delta) for the R-graded calculus on R_delta.
struct StructureConstants {
    int n;
    Rational delta;  // R-grading weight label

    Rational a_s(int k, const Rational& delta_s) const { return const_a(n, k, delta_s); }
    Rational h(int k) const { return const_h(n, k, delta); }
    Rational r(int l, int k) const { return const_r(n, l, k, delta); }
};

// ---------------------------------------------------------------------------
// The operators i(alpha), X, H and friends
// ---------------------------------------------------------------------------

namespace detail {

inline Weight shifted_weight(const Symbol& u, int fiber_shift) {
    if (u.grading == Grading::R) return u.weight;  // R label is degree-graded
    return Weight{u.weight.value + Rational(fiber_shift, u.n + 1)};
}

}  // namespace detail

/// Contraction with the contact form, on polynomials
///   1/2 (sum_i (p^i d_{xi_{q^i}} - q^i d_{xi_{p^i}}) - d_{xi_t}),
/// i.e. sum_j alpha_j d_{xi_j}. Lowers the fiber degree by one; lowers the
/// S weight by 1/(n+1), keeps the R weight label.
inline Symbol i_alpha(const Symbol& u) {
    int n = u.n;
    Rational half(1, 2);
    Poly acc(n);
    for (int i = 0; i < n; ++i) {
        acc += half * (Poly::variable(n, p_var(n, i)) * u.poly.diff(xi_q_var(n, i)));
        acc -= half * (Poly::variable(n, q_var(n, i)) * u.poly.diff(xi_p_var(n, i)));
    }
    acc -= half * u.poly.diff(xi_t_var(n));
    return Symbol(n, detail::shifted_weight(u, -1), u.grading, std::move(acc));
}

/// The degree-preserving transport part of the Hamiltonian operator:
///   D(S) = sum_i (xi_{q^i} d_{p^i} - xi_{p^i} d_{q^i}) S
///          + xi_t E_s(S) - <E_s, xi> d_t S.
inline Poly hamiltonian_transport(const Poly& s) {
    int n = s.n();
    Poly acc(n);
    for (int i = 0; i < n; ++i) {
        acc += Poly::variable(n, xi_q_var(n, i)) * s.diff(p_var(n, i));
        acc -= Poly::variable(n, xi_p_var(n, i)) * s.diff(q_var(n, i));
    }
    acc += Poly::variable(n, xi_t_var(n)) * symplectic_euler_apply(s);
    acc -= symplectic_euler_pairing(n) * s.diff(t_var(n));
    return acc;
}

/// The extended Hamiltonian operator on a fiber-homogeneous symbol:
/// X(S) = D(S) + a(k, delta) xi_t S, reading the constant off the symbol's
/// grading (on R^k_delta it equals 2(n+1)delta + k). Raises the fiber
/// degree by one.
inline Symbol big_X(const Symbol& u) {
    if (!u.is_fiber_homogeneous())
        throw DomainError("big_X needs a fiber-homogeneous symbol; split first");
    int n = u.n;
    int k = u.fiber_degree();
    Rational delta_s =
        u.grading == Grading::S ? u.weight.value : u.weight.value + Rational(k, n + 1);
    Rational c = const_a(n, k, delta_s);
    Poly acc = hamiltonian_transport(u.poly);
    acc += c * (Poly::variable(n, xi_t_var(n)) * u.poly);
    return Symbol(n, detail::shifted_weight(u, +1), u.grading, std::move(acc));
}

/// X extended to arbitrary symbols by acting per fiber component.
inline Symbol big_X_mixed(const Symbol& u) {
    if (u.is_fiber_homogeneous()) return big_X(u);
    Symbol acc = Symbol::zero(u.n, detail::shifted_weight(u, +1), u.grading);
    for (const Symbol& comp : fiber_components(u)) acc.poly += big_X(comp).poly;
    return acc;
}

/// H scales each R^k component by h_k = -((n+1) delta + k).
inline Symbol apply_H(const Symbol& u) {
    if (u.grading != Grading::R) throw GradingError("H acts on R-graded symbols");
    Symbol acc = Symbol::zero(u.n, u.weight, Grading::R);
    for (const Symbol& comp : fiber_components(u)) {
        acc.poly += const_h(u.n, comp.fiber_degree(), u.weight.value) * comp.poly;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Composable weight-shifting linear operators
// ---------------------------------------------------------------------------

/// A linear map on symbols together with its fiber-degree shift and its
/// S-grading weight shift. Closed under composition, sum, scalar multiple
/// and commutator; the arithmetic on shifts is tracked exactly.
class LinearOperator {
public:
    using Fn = std::function<Symbol(const Symbol&)>;

    LinearOperator(std::string label, int fiber_shift, Rational weight_shift, Fn fn)
        : label_(std::move(label)),
          fiber_shift_(fiber_shift),
          weight_shift_(std::move(weight_shift)),
          fn_(std::move(fn)) {}

    const std::string& label() const { return label_; }
    int fiber_shift() const { return fiber_shift_; }
    const Rational& weight_shift() const { return weight_shift_; }

    Symbol operator()(const Symbol& u) const { return fn_(u); }

private:
    std::string label_;
    int fiber_shift_;
    Rational weight_shift_;
    Fn fn_;
};

/// A after B.
inline LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(a.label() + "∘" + b.label(), a.fiber_shift() + b.fiber_shift(),
                          a.weight_shift() + b.weight_shift(),
                          [a, b](const Symbol& u) { return a(b(u)); });
}

inline LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    if (a.fiber_shift() != b.fiber_shift() || a.weight_shift() != b.weight_shift())
        throw GradingError("operator sum requires equal fiber and weight shifts");
    return LinearOperator("(" + a.label() + " + " + b.label() + ")", a.fiber_shift(),
                          a.weight_shift(), [a, b](const Symbol& u) {
                              Symbol x = a(u), y = b(u);
                              if (x.weight != y.weight || x.grading != y.grading)
                                  throw GradingError("operator sum produced mismatched symbols");
                              x.poly += y.poly;
                              return x;
                          });
}

inline LinearOperator operator*(const Rational& c, const LinearOperator& a) {
    return LinearOperator(to_string(c) + "·" + a.label(), a.fiber_shift(), a.weight_shift(),
                          [c, a](const Symbol& u) {
                              Symbol x = a(u);
                              x.poly *= c;
                              return x;
                          });
}

inline LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    return a + (Rational(-1) * b);
}

/// A B - B A; shifts add, so both branches land in the same space.
inline LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
    LinearOperator ab = compose(a, b), ba = compose(b, a);
    return LinearOperator("[" + a.label() + "," + b.label() + "]", ab.fiber_shift(),
                          ab.weight_shift(), [ab, ba](const Symbol& u) {
                              Symbol x = ab(u), y = ba(u);
                              if (x.weight != y.weight || x.grading != y.grading)
                                  throw GradingError("commutator branches disagree in weight");
                              x.poly -= y.poly;
                              return x;
                          });
}

inline LinearOperator op_identity() {
    return LinearOperator("Id", 0, Rational(0), [](const Symbol& u) { return u; });
}

inline LinearOperator op_pow(const LinearOperator& a, int l) {
    if (l < 0) throw DomainError("operator power must be >= 0");
    if (l == 0) return op_identity();
    LinearOperator acc = a;
    for (int i = 1; i < l; ++i) acc = compose(a, acc);
    return acc;
}

inline LinearOperator op_i_alpha(int n) {
    return LinearOperator("i(α)", -1, Rational(-1, n + 1),
                          [](const Symbol& u) { return i_alpha(u); });
}

inline LinearOperator op_X(int n) {
    return LinearOperator("X", +1, Rational(1, n + 1),
                          [](const Symbol& u) { return big_X_mixed(u); });
}

inline LinearOperator op_H(int n) {
    (void)n;
    return LinearOperator("H", 0, Rational(0), [](const Symbol& u) { return apply_H(u); });
}

inline LinearOperator op_lie(const PolyVectorField& z) {
    return LinearOperator("L_{" + z.str() + "}", 0, Rational(0),
                          [z](const Symbol& u) { return lie_derivative(z, u); });
}

/// D as a standalone operator on R-graded symbols.
inline LinearOperator op_D(int n) {
    return LinearOperator("D", +1, Rational(1, n + 1), [](const Symbol& u) {
        if (u.grading != Grading::R) throw GradingError("D helper acts on R-graded symbols");
        return Symbol(u.n, u.weight, Grading::R, hamiltonian_transport(u.poly));
    });
}

/// Multiplication by xi_t, keeping the R weight label.
inline LinearOperator op_mult_xi_t(int n) {
    return LinearOperator("ξ_t·", +1, Rational(1, n + 1), [](const Symbol& u) {
        if (u.grading != Grading::R) throw GradingError("ξ_t· helper acts on R-graded symbols");
        return Symbol(u.n, u.weight, Grading::R,
                      Poly::variable(u.n, xi_t_var(u.n)) * u.poly);
    });
}

/// Fiber Euler operator E_xi = sum_j xi_j d_{xi_j}.
inline LinearOperator op_E_xi(int n) {
    return LinearOperator("E_ξ", 0, Rational(0), [](const Symbol& u) {
        if (u.grading != Grading::R) throw GradingError("E_ξ helper acts on R-graded symbols");
        int m = u.n;
        Poly acc(m);
        for (int j = 0; j < num_base_vars(m); ++j) {
            int xi = xi_var(m, j);
            acc += Poly::variable(m, xi) * u.poly.diff(xi);
        }
        return Symbol(u.n, u.weight, Grading::R, std::move(acc));
    });
}

}  // namespace contactsym
