#include <catch2/catch_amalgamated.hpp>

#include "contactsym/operators.hpp"
#include "contactsym/random.hpp"

using namespace contactsym;

namespace {

Symbol sym(int n, const Rational& delta, Grading g, Poly p) {
    return Symbol(n, Weight{delta}, g, std::move(p));
}

}  // namespace

TEST_CASE("structure constants") {
    for (int n : {1, 2, 3}) {
        CHECK(const_a(n, 1, Rational(-1, n + 1)) == Rational(-3));
    }
    StructureConstants sc{1, Rational(1)};
    CHECK(sc.r(1, 1) == Rational(-3));
    CHECK(sc.r(2, 0) == Rational(-5));
    CHECK(sc.h(0) == Rational(-2));
    CHECK(const_h(1, 3, Rational(0)) == Rational(-3));
    // r(1, k) = h_k for every k and delta
    for (int k = 0; k <= 6; ++k) {
        for (const Rational& d : {Rational(1), Rational(-2, 3), Rational(7, 5)}) {
            CHECK(const_r(2, 1, k, d) == const_h(2, k, d));
        }
    }
    CHECK_THROWS_AS(const_a(1, -1, Rational(0)), DomainError);
}

TEST_CASE("contraction with the contact form") {
    int n = 1;
    Poly xt = Poly::variable(n, xi_t_var(n));
    Poly xq = Poly::variable(n, xi_q_var(n, 0));
    Poly p = Poly::variable(n, p_var(n, 0));

    CHECK(i_alpha(sym(n, Rational(0), Grading::S, xt)).poly ==
          Poly::constant(n, Rational(-1, 2)));
    CHECK(i_alpha(sym(n, Rational(0), Grading::S, xq * xq)).poly == p * xq);
    CHECK(i_alpha(sym(n, Rational(2), Grading::S, p * p)).is_zero());

    // weight bookkeeping: S shifts by -1/(n+1), R keeps the label
    Symbol s = i_alpha(sym(n, Rational(1), Grading::S, xt));
    CHECK(s.weight.value == Rational(1, 2));
    Symbol r = i_alpha(sym(n, Rational(1), Grading::R, xt));
    CHECK(r.weight.value == Rational(1));
}

TEST_CASE("extended hamiltonian operator") {
    int n = 1;
    Poly xt = Poly::variable(n, xi_t_var(n));
    Poly xq = Poly::variable(n, xi_q_var(n, 0));

    // 1 in R^0_1: coefficient 2(n+1)delta + k = 4
    Symbol one_r = sym(n, Rational(1), Grading::R, Poly::constant(n, 1));
    CHECK(big_X(one_r).poly == Rational(4) * xt);
    CHECK(big_X(one_r).weight.value == Rational(1));

    // xi_q in S^1_delta: a(1, delta) = 2(n+1)delta - 1
    for (const Rational& d : {Rational(0), Rational(1), Rational(7, 5)}) {
        Symbol u = sym(n, d, Grading::S, xq);
        CHECK(big_X(u).poly == (Rational(4) * d - 1) * (xt * xq));
        CHECK(big_X(u).weight.value == d + Rational(1, 2));
    }

    // fiber degree 0 agrees with the density hamiltonian at lambda = delta
    Poly t = Poly::variable(n, t_var(n));
    Symbol t2 = sym(n, Rational(-1, 2), Grading::S, t * t);
    CHECK(big_X(t2) == hamiltonian_density(t * t, Weight{Rational(-1, 2)}));
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = random_density(hash_mix(3, trial), n, 3);
        Rational d(trial - 5, 3);
        CHECK(big_X(sym(n, d, Grading::S, f)) == hamiltonian_density(f, Weight{d}));
    }

    Symbol mixed = sym(n, Rational(0), Grading::S, xq + Poly::constant(n, 1));
    CHECK_THROWS_AS(big_X(mixed), DomainError);
    CHECK_FALSE(big_X_mixed(mixed).is_zero());
}

TEST_CASE("H is the graded scalar") {
    int n = 1;
    Symbol one_r = sym(n, Rational(1), Grading::R, Poly::constant(n, 1));
    CHECK(apply_H(one_r).poly == Poly::constant(n, -2));  // h_0 = -((n+1)1 + 0)
    Symbol u = random_symbol(7, n, 3, Rational(0), 2, Grading::R);
    Symbol hu = apply_H(u);
    CHECK(hu.poly == Rational(-3) * u.poly);  // h_3 at delta = 0
    CHECK_THROWS_AS(apply_H(sym(n, Rational(0), Grading::S, Poly::constant(n, 1))), GradingError);
}

TEST_CASE("commutator engine") {
    int n = 1;
    PolyVectorField dq = PolyVectorField::from_components(
        {Poly::constant(n, 1), Poly(n), Poly(n)});
    PolyVectorField dp = PolyVectorField::from_components(
        {Poly(n), Poly::constant(n, 1), Poly(n)});
    LinearOperator c = commutator(op_lie(dq), op_lie(dp));
    for (int trial = 0; trial < 10; ++trial) {
        Symbol u = random_symbol(hash_mix(21, trial), n, 2, Rational(1, 2), 3, Grading::R);
        CHECK(c(u).is_zero());
    }

    // [i(alpha), X] on R^0_delta is h_0 = -(n+1) delta
    for (const Rational& d : {Rational(1), Rational(-2, 7)}) {
        Symbol one_r = sym(n, d, Grading::R, Poly::constant(n, 1));
        Symbol com = commutator(op_i_alpha(n), op_X(n))(one_r);
        CHECK(com.poly == Poly::constant(n, -(Rational(n + 1) * d)));
    }

    // [L_Z, i(alpha)] = 0 for the contact field X(q) = -d_p - q d_t
    PolyVectorField zq = contact_field(Poly::variable(n, q_var(n, 0)));
    LinearOperator inv = commutator(op_lie(zq), op_i_alpha(n));
    for (int trial = 0; trial < 10; ++trial) {
        Symbol u = random_symbol(hash_mix(23, trial), n, 2, Rational(7, 5), 3, Grading::R);
        CHECK(inv(u).is_zero());
    }

    // sums demand matching shifts
    CHECK_THROWS_AS(op_i_alpha(n) + op_X(n), GradingError);
    CHECK(op_pow(op_i_alpha(n), 0)(sym(n, Rational(1), Grading::R, Poly::constant(n, 5))).poly ==
          Poly::constant(n, 5));
}

TEST_CASE("sl2 relations on a sample panel") {
    for (int n : {1, 2}) {
        LinearOperator IA = op_i_alpha(n), X = op_X(n), H = op_H(n);
        for (const Rational& d : {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(7, 5)}) {
            for (int k = 0; k <= 3; ++k) {
                Symbol u = random_symbol(hash_mix(1000 * n + k, 31), n, k, d, 2, Grading::R);
                REQUIRE(commutator(IA, X)(u) == H(u));
                REQUIRE(commutator(H, IA)(u) == IA(u));
                REQUIRE(commutator(H, X)(u) == (Rational(-1) * X)(u));
                REQUIRE(op_pow(IA, k + 1)(u).is_zero());
            }
        }
    }
}

TEST_CASE("power commutators on a sample panel") {
    int n = 1;
    for (const Rational& d : {Rational(1), Rational(-1, 3)}) {
        StructureConstants sc{n, d};
        for (int k = 0; k <= 3; ++k) {
            Symbol u = random_symbol(hash_mix(59, k), n, k, d, 2, Grading::R);
            LinearOperator IA = op_i_alpha(n), X = op_X(n);
            for (int l = 1; l <= k + 1; ++l) {
                Symbol lhs = commutator(IA, op_pow(X, l))(u);
                Symbol rhs = (sc.r(l, k) * op_pow(X, l - 1))(u);
                REQUIRE(lhs == rhs);
                Symbol lhs2 = commutator(X, op_pow(IA, l))(u);
                Symbol rhs2 = ((-sc.r(l, k - l + 1)) * op_pow(IA, l - 1))(u);
                REQUIRE(lhs2 == rhs2);
            }
        }
    }
}

TEST_CASE("proof commutators restated") {
    int n = 2;
    for (int trial = 0; trial < 8; ++trial) {
        Symbol u = random_symbol(hash_mix(61, trial), n, trial % 4, Rational(1, 2), 2, Grading::R);
        Symbol lhs = commutator(op_i_alpha(n), op_D(n))(u);
        Symbol rhs = ((Rational(-1, 2) * op_E_xi(n)) - compose(op_mult_xi_t(n), op_i_alpha(n)))(u);
        REQUIRE(lhs == rhs);
        Symbol lhs2 = commutator(op_i_alpha(n), op_mult_xi_t(n))(u);
        Symbol rhs2 = u;
        rhs2.poly *= Rational(-1, 2);
        REQUIRE(lhs2 == rhs2);
    }
}
