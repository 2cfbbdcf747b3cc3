#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "contactsym/coords.hpp"
#include "contactsym/errors.hpp"
#include "contactsym/rational.hpp"

namespace contactsym {

/// Exponent vector of fixed length 2(2n+1); the length encodes n.
struct Monomial {
    std::vector<int> exps;

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    int base_degree() const {
        return std::accumulate(exps.begin(), exps.begin() + exps.size() / 2, 0);
    }

    int fiber_degree() const {
        return std::accumulate(exps.begin() + exps.size() / 2, exps.end(), 0);
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded lexicographic order: total degree first, then the exponent
/// vector. This is the canonical term order used for serialization.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    }
};

/// Sparse multivariate polynomial over Rational in the 2(2n+1) variables
/// of R^{2n+1} and its fiber. Zero coefficients are never stored; terms
/// are kept in graded-lex order, so equal polynomials compare equal
/// structurally.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Poly(int n) : n_(n) {
        if (n < 1) throw DomainError("n must be >= 1");
    }

    static Poly constant(int n, const Rational& c) {
        Poly out(n);
        if (c != 0) out.terms_.emplace(Monomial{std::vector<int>(num_vars(n), 0)}, c);
        return out;
    }

    static Poly variable(int n, int var) {
        check_var_index(n, var);
        std::vector<int> e(num_vars(n), 0);
        e[var] = 1;
        Poly out(n);
        out.terms_.emplace(Monomial{std::move(e)}, Rational(1));
        return out;
    }

    static Poly from_term(int n, Monomial m, const Rational& c) {
        if (static_cast<int>(m.exps.size()) != num_vars(n))
            throw DimensionError("exponent vector has wrong length");
        for (int e : m.exps)
            if (e < 0) throw DomainError("negative exponent");
        Poly out(n);
        if (c != 0) out.terms_.emplace(std::move(m), c);
        return out;
    }

    int n() const { return n_; }
    int var_count() const { return num_vars(n_); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    int base_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.base_degree());
        return d;
    }

    /// Maximal fiber degree over the terms; -1 for zero.
    int fiber_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.fiber_degree());
        return d;
    }

    bool has_fiber_vars() const {
        for (const auto& [m, c] : terms_)
            if (m.fiber_degree() > 0) return true;
        return false;
    }

    /// True when every term has the same fiber degree (vacuously for zero).
    bool is_fiber_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int f = m.fiber_degree();
            if (d == -1) d = f;
            else if (f != d) return false;
        }
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly operator-() const {
        Poly out(n_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_n(b);
        Poly out(a.n_);
        Monomial prod;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                prod.exps.resize(ma.exps.size());
                for (std::size_t i = 0; i < ma.exps.size(); ++i)
                    prod.exps[i] = ma.exps[i] + mb.exps[i];
                out.add_term(prod, ca * cb);
            }
        }
        return out;
    }

    /// Formal partial derivative with respect to one variable.
    Poly diff(int var) const {
        check_var_index(n_, var);
        Poly out(n_);
        for (const auto& [m, c] : terms_) {
            int e = m.exps[var];
            if (e == 0) continue;
            Monomial d = m;
            d.exps[var] = e - 1;
            out.terms_.emplace(std::move(d), c * e);
        }
        return out;
    }

    /// Exact evaluation at a full coordinate point (length 2(2n+1)).
    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != var_count())
            throw DimensionError("evaluation point has wrong length");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                for (int e = 0; e < m.exps[i]; ++e) term *= point[i];
            }
            acc += term;
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Human-readable form, e.g. "-1/2*xt + 3*q1*xp1"; "0" for zero.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string factors;
            for (std::size_t v = 0; v < m.exps.size(); ++v) {
                if (m.exps[v] == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += var_name(n_, static_cast<int>(v));
                if (m.exps[v] > 1) factors += "^" + std::to_string(m.exps[v]);
            }
            if (factors.empty()) out += to_string(a);
            else if (a == 1) out += factors;
            else out += to_string(a) + "*" + factors;
        }
        return out;
    }

private:
    void check_same_n(const Poly& o) const {
        if (n_ != o.n_)
            throw DimensionError("polynomials over different base dimensions (n = " +
                                 std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }

    int n_;
    TermMap terms_;
};

}  // namespace contactsym
