#include <catch2/catch_amalgamated.hpp>

#include "contactsym/random.hpp"
#include "contactsym/symbol.hpp"

using namespace contactsym;

namespace {

PolyVectorField field(std::initializer_list<Poly> comps) {
    return PolyVectorField::from_components(std::vector<Poly>(comps));
}

}  // namespace

TEST_CASE("lie derivative of densities") {
    int n = 1;
    PolyVectorField dq = field({Poly::constant(n, 1), Poly(n), Poly(n)});
    Poly q = Poly::variable(n, q_var(n, 0));

    // transport only: d_q applied to q^2
    CHECK(lie_derivative_density(dq, q * q, Weight{Rational(7, 3)}) == Rational(2) * q);

    // divergence only: q d_q applied to 1 gives lambda
    PolyVectorField qdq = field({q, Poly(n), Poly(n)});
    CHECK(lie_derivative_density(qdq, Poly::constant(n, 1), Weight{Rational(5, 3)}) ==
          Poly::constant(n, Rational(5, 3)));

    // lambda = 0 is the plain directional derivative
    PolyVectorField dt = field({Poly(n), Poly(n), Poly::constant(n, 1)});
    CHECK(lie_derivative_density(dt, Poly::variable(n, t_var(n)), Weight{Rational(0)}) ==
          Poly::constant(n, 1));

    Poly with_fiber = Poly::variable(n, xi_q_var(n, 0));
    CHECK_THROWS_AS(lie_derivative_density(dq, with_fiber, Weight{Rational(0)}), DomainError);
}

TEST_CASE("lie derivative of symbols") {
    int n = 1;
    Poly q = Poly::variable(n, q_var(n, 0));
    Poly xq = Poly::variable(n, xi_q_var(n, 0));

    PolyVectorField zero = PolyVectorField::zero(n);
    Symbol u(n, Weight{Rational(2, 7)}, Grading::S, xq);
    CHECK(lie_derivative_symbol(zero, u).is_zero());

    // q d_q on xi_q: delta-term minus matrix term
    PolyVectorField qdq = field({q, Poly(n), Poly(n)});
    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(-3)}) {
        Symbol v(n, Weight{d}, Grading::S, xq);
        Symbol lv = lie_derivative_symbol(qdq, v);
        CHECK(lv.poly == xq * (d - 1));
        CHECK(lv.weight.value == d);
    }

    // transport term only
    PolyVectorField dt = field({Poly(n), Poly(n), Poly::constant(n, 1)});
    Symbol w(n, Weight{Rational(1)}, Grading::S, Poly::variable(n, t_var(n)) * xq);
    CHECK(lie_derivative_symbol(dt, w).poly == xq);

    // index structure of the matrix term: q d_p moves xi_q to -xi_p
    PolyVectorField qdp = field({Poly(n), q, Poly(n)});
    CHECK(lie_derivative_symbol(qdp, u).poly == -Poly::variable(n, xi_p_var(n, 0)));
}

TEST_CASE("bracket representation property") {
    for (int n : {1, 2}) {
        for (int t = 0; t < 15; ++t) {
            PolyVectorField z = random_vector_field(hash_mix(1, t + 10 * n), n, 2);
            PolyVectorField w = random_vector_field(hash_mix(2, t + 10 * n), n, 2);
            Symbol u = random_symbol(hash_mix(3, t + 10 * n), n, t % 3, Rational(-1, 3), 2,
                                     Grading::S);
            Symbol lhs = lie_derivative_symbol(z, lie_derivative_symbol(w, u));
            lhs.poly -= lie_derivative_symbol(w, lie_derivative_symbol(z, u)).poly;
            REQUIRE(lhs.poly == lie_derivative_symbol(bracket(z, w), u).poly);
        }
    }
}

TEST_CASE("grading relabel") {
    int n = 2;
    Symbol u(n, Weight{Rational(0)}, Grading::S, Poly::variable(n, xi_q_var(n, 1)));
    Symbol r = to_R_grading(u);
    CHECK(r.grading == Grading::R);
    CHECK(r.weight.value == Rational(-1, n + 1));
    CHECK(from_R_grading(r) == u);

    Symbol c(n, Weight{Rational(3, 4)}, Grading::S, Poly::constant(n, 5));
    CHECK(to_R_grading(c).weight.value == Rational(3, 4));  // k = 0, no shift

    Symbol mixed(n, Weight{Rational(0)}, Grading::S,
                 Poly::variable(n, xi_q_var(n, 0)) + Poly::constant(n, 1));
    CHECK_THROWS_AS(to_R_grading(mixed), DomainError);
}

TEST_CASE("fiber components") {
    int n = 1;
    Poly xq = Poly::variable(n, xi_q_var(n, 0));
    Poly xp = Poly::variable(n, xi_p_var(n, 0));
    Symbol u(n, Weight{Rational(1)}, Grading::S, xq + xq * xp);
    auto comps = fiber_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].poly == xq);
    CHECK(comps[1].poly == xq * xp);
    Poly sum(n);
    for (const auto& c : comps) sum += c.poly;
    CHECK(sum == u.poly);

    CHECK(fiber_components(Symbol::zero(n, Weight{Rational(0)}, Grading::S)).empty());
    CHECK(fiber_components(comps[0]).size() == 1);
}

TEST_CASE("lie derivative preserves weight and fiber degree") {
    for (int t = 0; t < 10; ++t) {
        PolyVectorField z = random_vector_field(hash_mix(9, t), 1, 2);
        Symbol u = random_symbol(hash_mix(8, t), 1, 2, Rational(7, 5), 3, Grading::S);
        Symbol lu = lie_derivative_symbol(z, u);
        REQUIRE(lu.weight == u.weight);
        if (!lu.is_zero()) REQUIRE(lu.fiber_degree() == 2);
    }
}

TEST_CASE("r-graded lie derivative matches the relabeled action") {
    for (int t = 0; t < 10; ++t) {
        PolyVectorField z = random_vector_field(hash_mix(31, t), 1, 2);
        Symbol u = random_symbol(hash_mix(32, t), 1, 3, Rational(1, 2), 2, Grading::R);
        Symbol via_wrapper = lie_derivative(z, u);
        Symbol via_relabel = to_R_grading(lie_derivative_symbol(z, from_R_grading(u)));
        REQUIRE(via_wrapper == via_relabel);
    }
}

TEST_CASE("vector field plumbing") {
    int n = 1;
    Poly q = Poly::variable(n, q_var(n, 0));
    PolyVectorField e = field({q, Poly::variable(n, p_var(n, 0)), Poly::variable(n, t_var(n))});
    CHECK(e.divergence() == Poly::constant(n, 3));
    CHECK(e.component(0) == q);

    // weight and degree constraints on the symbol view
    Symbol bad_weight(n, Weight{Rational(1)}, Grading::S, e.poly());
    CHECK_THROWS_AS(PolyVectorField::from_symbol(bad_weight), DomainError);
    Symbol bad_degree(n, Weight{Rational(0)}, Grading::S,
                      Poly::variable(n, xi_q_var(n, 0)) * Poly::variable(n, xi_p_var(n, 0)));
    CHECK_THROWS_AS(PolyVectorField::from_symbol(bad_degree), DomainError);
    CHECK(PolyVectorField::from_symbol(e.as_symbol()) == e);
}
