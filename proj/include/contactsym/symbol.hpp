#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contactsym/poly.hpp"

namespace contactsym {

/// Density weight. Exact and otherwise unconstrained.
struct Weight {
    Rational value;

    bool operator==(const Weight& o) const { return value == o.value; }
    bool operator!=(const Weight& o) const { return value != o.value; }
};

/// Two labelings of the same symbol modules: under S the stored weight is
/// the delta of S^k_delta; under R it is the delta of R^k_delta =
/// S^k_{delta + k/(n+1)}.
enum class Grading { S, R };

inline std::string to_string(Grading g) { return g == Grading::S ? "S" : "R"; }

/// A polynomial on the cotangent bundle of R^{2n+1}, polynomial along the
/// fibre, tagged with its density weight and grading convention. Plays the
/// role of an element of S^k_delta or R^k_delta (or a finite sum of those
/// across fiber degrees, with the weight label shared).
struct Symbol {
    int n;
    Weight weight;
    Grading grading;
    Poly poly;

    Symbol(int n_, Weight w, Grading g, Poly p)
        : n(n_), weight(std::move(w)), grading(g), poly(std::move(p)) {
        if (poly.n() != n) throw DimensionError("symbol polynomial has wrong n");
    }

    static Symbol zero(int n, Weight w, Grading g) { return Symbol(n, std::move(w), g, Poly(n)); }

    bool is_zero() const { return poly.is_zero(); }
    bool is_fiber_homogeneous() const { return poly.is_fiber_homogeneous(); }

    /// Fiber degree of a homogeneous symbol; 0 for the zero symbol.
    int fiber_degree() const {
        if (!is_fiber_homogeneous())
            throw DomainError("symbol is not fiber-homogeneous");
        int d = poly.fiber_degree();
        return d < 0 ? 0 : d;
    }

    Symbol with_poly(Poly p) const { return Symbol(n, weight, grading, std::move(p)); }

    bool operator==(const Symbol& o) const {
        return n == o.n && weight == o.weight && grading == o.grading && poly == o.poly;
    }
    bool operator!=(const Symbol& o) const { return !(*this == o); }

    std::string str() const {
        return "[n=" + std::to_string(n) + " " + contactsym::to_string(grading) +
               " delta=" + contactsym::to_string(weight.value) + "] " + poly.str();
    }
};

/// Splits a symbol into its fiber-homogeneous components, ascending in
/// fiber degree. The zero symbol yields an empty list.
inline std::vector<Symbol> fiber_components(const Symbol& u) {
    std::map<int, Poly> parts;
    for (const auto& [m, c] : u.poly.terms()) {
        auto [it, inserted] = parts.try_emplace(m.fiber_degree(), u.n);
        it->second.add_term(m, c);
    }
    std::vector<Symbol> out;
    out.reserve(parts.size());
    for (auto& [k, p] : parts) out.push_back(u.with_poly(std::move(p)));
    return out;
}

/// Relabels a fiber-homogeneous symbol of degree k from S^k_delta to
/// R^k_{delta - k/(n+1)}.
inline Symbol to_R_grading(const Symbol& u) {
    if (u.grading == Grading::R) throw GradingError("symbol already in R grading");
    int k = u.fiber_degree();
    Rational shift = Rational(k) / Rational(u.n + 1);
    return Symbol(u.n, Weight{u.weight.value - shift}, Grading::R, u.poly);
}

/// Inverse relabeling, R^k_delta -> S^k_{delta + k/(n+1)}.
inline Symbol from_R_grading(const Symbol& u) {
    if (u.grading == Grading::S) throw GradingError("symbol already in S grading");
    int k = u.fiber_degree();
    Rational shift = Rational(k) / Rational(u.n + 1);
    return Symbol(u.n, Weight{u.weight.value + shift}, Grading::S, u.poly);
}

/// A polynomial vector field Z = sum_i Z^i d/dx^i, stored as the fiber
/// linear function sum_i Z^i xi_i. Acts as a derivation on densities and
/// symbols; carries no density weight of its own.
class PolyVectorField {
public:
    explicit PolyVectorField(Poly p) : poly_(std::move(p)) {
        for (const auto& [m, c] : poly_.terms()) {
            if (m.fiber_degree() != 1)
                throw DomainError("vector field terms must have fiber degree exactly 1");
        }
    }

    static PolyVectorField zero(int n) { return PolyVectorField(Poly(n)); }

    /// Builds sum_i comps[i] d/dx^i from base-only coefficient polynomials.
    static PolyVectorField from_components(const std::vector<Poly>& comps) {
        if (comps.empty()) throw DomainError("empty component list");
        int n = comps[0].n();
        if (static_cast<int>(comps.size()) != num_base_vars(n))
            throw DimensionError("expected 2n+1 components");
        Poly acc(n);
        for (int i = 0; i < num_base_vars(n); ++i) {
            if (comps[i].has_fiber_vars())
                throw DomainError("vector field coefficients must be base functions");
            acc += comps[i] * Poly::variable(n, xi_var(n, i));
        }
        return PolyVectorField(std::move(acc));
    }

    /// Reads a vector field out of a weight-0, fiber-degree-1 S-symbol.
    static PolyVectorField from_symbol(const Symbol& u) {
        if (u.grading != Grading::S) throw GradingError("vector field symbols use the S grading");
        if (u.weight.value != 0) throw DomainError("vector field symbols have weight 0");
        if (!u.is_zero() && u.fiber_degree() != 1)
            throw DomainError("vector field symbols have fiber degree 1");
        return PolyVectorField(u.poly);
    }

    int n() const { return poly_.n(); }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    Symbol as_symbol() const { return Symbol(n(), Weight{Rational(0)}, Grading::S, poly_); }

    /// Coefficient Z^i of d/dx^i.
    Poly component(int base_var) const { return poly_.diff(xi_var(n(), base_var)); }

    /// sum_i d_{x^i} Z^i.
    Poly divergence() const {
        Poly acc(n());
        for (int i = 0; i < num_base_vars(n()); ++i)
            acc += component(i).diff(i);
        return acc;
    }

    /// Directional derivative sum_i Z^i d_{x^i} u (u may contain fiber
    /// variables; they are transported as constants here).
    Poly apply(const Poly& u) const {
        if (u.n() != n()) throw DimensionError("vector field and argument differ in n");
        Poly acc(n());
        for (int i = 0; i < num_base_vars(n()); ++i)
            acc += component(i) * u.diff(i);
        return acc;
    }

    bool operator==(const PolyVectorField& o) const { return poly_ == o.poly_; }

    std::string str() const { return poly_.str(); }

private:
    Poly poly_;
};

inline PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
    return PolyVectorField(a.poly() + b.poly());
}

inline PolyVectorField operator*(const Rational& s, const PolyVectorField& z) {
    return PolyVectorField(z.poly() * s);
}

/// Vector-field bracket [Z,W]^i = Z(W^i) - W(Z^i).
inline PolyVectorField bracket(const PolyVectorField& z, const PolyVectorField& w) {
    if (z.n() != w.n()) throw DimensionError("bracket operands differ in n");
    int n = z.n();
    std::vector<Poly> comps;
    comps.reserve(num_base_vars(n));
    for (int i = 0; i < num_base_vars(n); ++i)
        comps.push_back(z.apply(w.component(i)) - w.apply(z.component(i)));
    return PolyVectorField::from_components(comps);
}

/// Lie derivative of a lambda-density along Z:
/// Z.f + lambda div(Z) f, all exact.
inline Poly lie_derivative_density(const PolyVectorField& z, const Poly& f, const Weight& lambda) {
    if (f.n() != z.n()) throw DimensionError("density and field differ in n");
    if (f.has_fiber_vars()) throw DomainError("densities must not contain fiber variables");
    return z.apply(f) + lambda.value * (z.divergence() * f);
}

/// Natural action on S-graded symbols:
///   Z.u + delta div(Z) u - sum_{i,k} (d_{x^k} Z^i) xi_i d_{xi_k} u.
/// Preserves fiber degree and weight.
inline Symbol lie_derivative_symbol(const PolyVectorField& z, const Symbol& u) {
    if (z.n() != u.n) throw DimensionError("field and symbol differ in n");
    if (u.grading != Grading::S)
        throw GradingError("lie_derivative_symbol expects the S grading");
    int n = u.n;
    Poly acc = z.apply(u.poly);
    acc += u.weight.value * (z.divergence() * u.poly);
    for (int i = 0; i < num_base_vars(n); ++i) {
        Poly zi = z.component(i);
        Poly xi_i = Poly::variable(n, xi_var(n, i));
        for (int k = 0; k < num_base_vars(n); ++k) {
            Poly dzi = zi.diff(k);
            if (dzi.is_zero()) continue;
            acc -= dzi * (xi_i * u.poly.diff(xi_var(n, k)));
        }
    }
    return u.with_poly(std::move(acc));
}

/// Lie derivative for either grading: R-graded symbols are transported
/// per fiber-homogeneous component through the S relabeling, keeping the
/// R weight label intact.
inline Symbol lie_derivative(const PolyVectorField& z, const Symbol& u) {
    if (u.grading == Grading::S) return lie_derivative_symbol(z, u);
    Symbol acc = Symbol::zero(u.n, u.weight, Grading::R);
    for (const Symbol& comp : fiber_components(u)) {
        Symbol moved = to_R_grading(lie_derivative_symbol(z, from_R_grading(comp)));
        acc.poly += moved.poly;
    }
    return acc;
}

}  // namespace contactsym
