#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contactsym/forms.hpp"
#include "contactsym/symbol.hpp"

namespace contactsym {

/// Density paired with its weight; the argument and result type of the
/// Lagrange bracket.
struct Density {
    Poly poly;
    Weight weight;
};

/// The standard contact form on R^{2n+1},
///   alpha = 1/2 (sum_k (p^k dq^k - q^k dp^k) - dt),
/// kept as its coefficient covector. Construction verifies maximal
/// non-degeneracy by computing alpha ^ (d alpha)^n exactly.
class ContactForm {
public:
    static ContactForm standard(int n) {
        if (n < 1) throw DomainError("n must be >= 1");
        std::vector<Poly> coeffs;
        coeffs.reserve(num_base_vars(n));
        Rational half(1, 2);
        for (int i = 0; i < n; ++i) coeffs.push_back(Poly::variable(n, p_var(n, i)) * half);
        for (int i = 0; i < n; ++i) coeffs.push_back(Poly::variable(n, q_var(n, i)) * -half);
        coeffs.push_back(Poly::constant(n, -half));
        ContactForm out(n, std::move(coeffs));
        if (out.volume_coefficient().is_zero())
            throw DomainError("contact form degenerate: alpha ^ (d alpha)^n = 0");
        return out;
    }

    int n() const { return n_; }
    const std::vector<Poly>& coefficients() const { return coeffs_; }
    const Poly& coefficient(int j) const { return coeffs_.at(j); }

    /// alpha(Z) = sum_j alpha_j Z^j.
    Poly pairing(const PolyVectorField& z) const {
        Poly acc(n_);
        for (int j = 0; j < num_base_vars(n_); ++j) acc += coeffs_[j] * z.component(j);
        return acc;
    }

    /// The single coefficient of the top form alpha ^ (d alpha)^n on the
    /// increasing index tuple (0,...,2n).
    Poly volume_coefficient() const {
        DifferentialForm alpha = DifferentialForm::one_form(coeffs_);
        DifferentialForm dalpha = alpha.d();
        DifferentialForm top = alpha;
        for (int i = 0; i < n_; ++i) top = wedge(top, dalpha);
        std::vector<int> all(num_base_vars(n_));
        for (int i = 0; i < num_base_vars(n_); ++i) all[i] = i;
        return top.component(all);
    }

private:
    ContactForm(int n, std::vector<Poly> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

    int n_;
    std::vector<Poly> coeffs_;
};

inline ContactForm alpha_coefficients(int n) { return ContactForm::standard(n); }

struct IsContactResult {
    bool contact;
    std::optional<Poly> multiplier;  // f_Z, present iff contact
};

/// Lie derivative of a covector field along Z (lowered-index transport):
/// (L_Z beta)_j = Z.beta_j + sum_i beta_i d_{x^j} Z^i.
inline std::vector<Poly> lie_derivative_covector(const PolyVectorField& z,
                                                 const std::vector<Poly>& beta) {
    int n = z.n();
    if (static_cast<int>(beta.size()) != num_base_vars(n))
        throw DimensionError("covector must have 2n+1 components");
    std::vector<Poly> out;
    out.reserve(beta.size());
    for (int j = 0; j < num_base_vars(n); ++j) {
        Poly acc = z.apply(beta[j]);
        for (int i = 0; i < num_base_vars(n); ++i)
            acc += beta[i] * z.component(i).diff(j);
        out.push_back(std::move(acc));
    }
    return out;
}

/// Tests whether Z preserves the contact structure: L_Z alpha = f alpha
/// with f = div(Z)/(n+1) (the only candidate multiplier). Returns f when
/// the test holds.
inline IsContactResult is_contact(const PolyVectorField& z) {
    int n = z.n();
    ContactForm alpha = ContactForm::standard(n);
    std::vector<Poly> lz = lie_derivative_covector(z, alpha.coefficients());
    Poly f = z.divergence() * Rational(1, n + 1);
    for (int j = 0; j < num_base_vars(n); ++j) {
        if (lz[j] != f * alpha.coefficient(j)) return {false, std::nullopt};
    }
    return {true, std::move(f)};
}

/// E_s f = sum_k (p^k d_{p^k} + q^k d_{q^k}) f.
inline Poly symplectic_euler_apply(const Poly& f) {
    int n = f.n();
    Poly acc(n);
    for (int i = 0; i < n; ++i) {
        acc += Poly::variable(n, q_var(n, i)) * f.diff(q_var(n, i));
        acc += Poly::variable(n, p_var(n, i)) * f.diff(p_var(n, i));
    }
    return acc;
}

/// <E_s, xi> = sum_k (q^k xi_{q^k} + p^k xi_{p^k}).
inline Poly symplectic_euler_pairing(int n) {
    Poly acc(n);
    for (int i = 0; i < n; ++i) {
        acc += Poly::variable(n, q_var(n, i)) * Poly::variable(n, xi_q_var(n, i));
        acc += Poly::variable(n, p_var(n, i)) * Poly::variable(n, xi_p_var(n, i));
    }
    return acc;
}

/// Euler field E = E_s + t d_t as a vector field.
inline PolyVectorField euler_field(int n) {
    std::vector<Poly> comps;
    comps.reserve(num_base_vars(n));
    for (int i = 0; i < num_base_vars(n); ++i)
        comps.push_back(Poly::variable(n, i));
    return PolyVectorField::from_components(comps);
}

/// The invariant bracket on densities,
///   {f,g} = sum_k (d_{p^k} f d_{q^k} g - d_{q^k} f d_{p^k} g)
///           - d_t f E_s.g + d_t g E_s.f + 2(n+1)(lambda f d_t g - mu g d_t f),
/// of output weight lambda + mu + 1/(n+1).
inline Density lagrange_bracket(const Poly& f, const Weight& lambda, const Poly& g,
                                const Weight& mu) {
    if (f.n() != g.n()) throw DimensionError("bracket operands differ in n");
    if (f.has_fiber_vars() || g.has_fiber_vars())
        throw DomainError("lagrange_bracket expects densities (no fiber variables)");
    int n = f.n();
    int t = t_var(n);
    Poly acc(n);
    for (int k = 0; k < n; ++k) {
        acc += f.diff(p_var(n, k)) * g.diff(q_var(n, k));
        acc -= f.diff(q_var(n, k)) * g.diff(p_var(n, k));
    }
    acc -= f.diff(t) * symplectic_euler_apply(g);
    acc += g.diff(t) * symplectic_euler_apply(f);
    Rational c(2 * (n + 1));
    acc += c * lambda.value * (f * g.diff(t));
    acc -= c * mu.value * (g * f.diff(t));
    Weight w{lambda.value + mu.value + Rational(1, n + 1)};
    return {std::move(acc), std::move(w)};
}

/// Contact Hamiltonian of a density: the fiber-degree-1 symbol
///   X(f)(xi) = sum_k (xi_{q^k} d_{p^k} f - xi_{p^k} d_{q^k} f)
///              - d_t f <E_s, xi> + xi_t (E_s.f + 2(n+1) lambda f),
/// of weight lambda + 1/(n+1) in the S grading.
inline Symbol hamiltonian_density(const Poly& f, const Weight& lambda) {
    if (f.has_fiber_vars())
        throw DomainError("hamiltonian_density expects a density (no fiber variables)");
    int n = f.n();
    Poly acc(n);
    for (int k = 0; k < n; ++k) {
        acc += Poly::variable(n, xi_q_var(n, k)) * f.diff(p_var(n, k));
        acc -= Poly::variable(n, xi_p_var(n, k)) * f.diff(q_var(n, k));
    }
    acc -= f.diff(t_var(n)) * symplectic_euler_pairing(n);
    Poly t_part = symplectic_euler_apply(f) + Rational(2 * (n + 1)) * lambda.value * f;
    acc += Poly::variable(n, xi_t_var(n)) * t_part;
    return Symbol(n, Weight{lambda.value + Rational(1, n + 1)}, Grading::S, std::move(acc));
}

/// Contact Hamiltonian at the weight -1/(n+1) that makes the result an
/// honest vector field.
inline PolyVectorField contact_field(const Poly& f) {
    Symbol x = hamiltonian_density(f, Weight{Rational(-1, f.n() + 1)});
    return PolyVectorField::from_symbol(x);
}

enum class AlgebraName { Aff, SL, SP };

/// A generating family of vector fields together with the rank its span
/// must have inside the polynomial fields of degree <= 2.
struct AlgebraBasis {
    AlgebraName name;
    int n;
    std::vector<PolyVectorField> elements;
    int expected_rank;
};

/// Monomials of degree <= 2 in the base variables, graded-lex order.
inline std::vector<Poly> base_monomials_up_to_degree(int n, int max_degree) {
    std::vector<Poly> out;
    std::vector<Monomial> monos;
    std::vector<int> exps(num_vars(n), 0);
    // enumerate base exponent vectors of total degree <= max_degree
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == num_base_vars(n)) {
            monos.push_back(Monomial{exps});
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            rec(var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(0, max_degree);
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    out.reserve(monos.size());
    for (auto& m : monos) out.push_back(Poly::from_term(n, std::move(m), Rational(1)));
    return out;
}

/// Generators of the contact projective algebra: the contact Hamiltonians
/// of the base monomials of degree <= 2 at weight -1/(n+1). There are
/// (n+1)(2n+3) of them and they are linearly independent.
inline AlgebraBasis sp_generators(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::vector<PolyVectorField> elems;
    for (const Poly& m : base_monomials_up_to_degree(n, 2))
        elems.push_back(contact_field(m));
    return {AlgebraName::SP, n, std::move(elems), (n + 1) * (2 * n + 3)};
}

/// Spanning family of the projective algebra: constant fields, all linear
/// fields, and the quadratic fields x^j E. The family has
/// (2n+1)^2 + 2(2n+1) members and rank (2n+2)^2 - 1.
inline AlgebraBasis sl_generators(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::vector<PolyVectorField> elems;
    int m = num_base_vars(n);
    std::vector<Poly> zero_comps(m, Poly(n));
    for (int j = 0; j < m; ++j) {
        auto comps = zero_comps;
        comps[j] = Poly::constant(n, Rational(1));
        elems.push_back(PolyVectorField::from_components(comps));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto comps = zero_comps;
            comps[j] = Poly::variable(n, i);
            elems.push_back(PolyVectorField::from_components(comps));
        }
    }
    PolyVectorField euler = euler_field(n);
    for (int j = 0; j < m; ++j) {
        Poly xj = Poly::variable(n, j);
        elems.push_back(PolyVectorField(euler.poly() * xj));
    }
    return {AlgebraName::SL, n, std::move(elems), (2 * n + 2) * (2 * n + 2) - 1};
}

/// Constant plus linear fields.
inline AlgebraBasis aff_generators(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    AlgebraBasis sl = sl_generators(n);
    int m = num_base_vars(n);
    sl.elements.erase(sl.elements.begin() + (m + m * m), sl.elements.end());
    return {AlgebraName::Aff, n, std::move(sl.elements), m * m + m};
}

}  // namespace contactsym
