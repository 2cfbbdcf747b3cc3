#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "contactsym/decomposition.hpp"
#include "contactsym/io.hpp"
#include "contactsym/random.hpp"
#include "contactsym/report.hpp"
#include "contactsym/slices.hpp"

namespace contactsym {
namespace verify {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ring",        "lie",          "contact",    "algebra",
        "oracle",      "sl2",          "power",      "ialpha-invariance",
        "x-invariance", "x-noninvariance", "projector", "section",
        "decomposition", "filtration",  "splitting",  "singular",
        "negative-control"};
    return names;
}

namespace detail {

using Params = std::vector<std::pair<std::string, std::string>>;

/// Collects one check: first failure wins, timing recorded on finish.
class Check {
public:
    Check(Report& rep, std::string id, Params params)
        : rep_(rep), t0_(std::chrono::steady_clock::now()) {
        res_.id = std::move(id);
        res_.params = std::move(params);
    }

    void fail(const std::string& detail) {
        if (res_.status == CheckStatus::Fail) return;
        res_.status = CheckStatus::Fail;
        res_.detail = detail;
    }

    void skip(const std::string& reason) {
        if (res_.status != CheckStatus::Pass) return;
        res_.status = CheckStatus::Skip;
        res_.detail = reason;
    }

    bool failed() const { return res_.status == CheckStatus::Fail; }

    ~Check() {
        res_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            t0_)
                      .count();
        rep_.add(std::move(res_));
    }

private:
    Report& rep_;
    CheckResult res_;
    std::chrono::steady_clock::time_point t0_;
};

inline std::uint64_t cell_seed(const SuiteConfig& cfg, const std::string& id,
                               const std::string& params, int trial) {
    return hash_mix(hash_mix(cfg.seed, hash_str(id)), hash_mix(hash_str(params), trial));
}

inline Params params_n(int n) { return {{"n", std::to_string(n)}}; }

inline Params params_nd(int n, const Rational& d) {
    return {{"n", std::to_string(n)}, {"delta", to_string(d)}};
}

inline Params params_nkd(int n, int k, const Rational& d) {
    return {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"delta", to_string(d)}};
}

inline std::string show(const Symbol& u) { return "\n" + serialize_symbol(u); }

/// Generic polynomial (mixed fiber degrees) for the ring-axiom checks.
inline Poly random_poly(std::uint64_t seed, int n, int B) {
    Splitmix64 rng(seed);
    Poly acc(n);
    for (int k = 0; k <= 2; ++k) {
        acc += random_symbol(rng.next(), n, k, Rational(0), B, Grading::S).poly;
    }
    return acc;
}

inline std::vector<Rational> random_point(std::uint64_t seed, int n) {
    Splitmix64 rng(seed);
    std::vector<Rational> pt;
    pt.reserve(num_vars(n));
    for (int i = 0; i < num_vars(n); ++i) pt.push_back(random_coefficient(rng));
    return pt;
}

inline const char* kSingularSkip = "skipped: singular weight";

}  // namespace detail

// ---------------------------------------------------------------------------
// exactpoly: ring axioms, mixed partials, evaluation homomorphism
// ---------------------------------------------------------------------------

inline void suite_ring(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        {
            Check chk(rep, "ring/axioms", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "ring/axioms", std::to_string(n), t);
                Poly a = random_poly(hash_mix(s, 1), n, cfg.base_deg);
                Poly b = random_poly(hash_mix(s, 2), n, cfg.base_deg);
                Poly c = random_poly(hash_mix(s, 3), n, cfg.base_deg);
                if ((a + b) + c != a + (b + c)) chk.fail("additive associativity");
                if (a + b != b + a) chk.fail("additive commutativity");
                if (a * b != b * a) chk.fail("multiplicative commutativity");
                if ((a * b) * c != a * (b * c)) chk.fail("multiplicative associativity");
                if (a * (b + c) != a * b + a * c) chk.fail("distributivity");
                if (!(a - a).is_zero()) chk.fail("additive inverse");
                Poly one = Poly::constant(n, Rational(1));
                if (a * one != a) chk.fail("multiplicative identity");
            }
        }
        {
            Check chk(rep, "ring/mixed-partials", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "ring/mixed-partials", std::to_string(n), t);
                Poly a = random_poly(s, n, cfg.base_deg);
                Splitmix64 rng(hash_mix(s, 77));
                int u = static_cast<int>(rng.below(num_vars(n)));
                int v = static_cast<int>(rng.below(num_vars(n)));
                if (a.diff(u).diff(v) != a.diff(v).diff(u)) chk.fail("mixed partials differ");
            }
        }
        {
            Check chk(rep, "ring/eval-homomorphism", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "ring/eval-homomorphism", std::to_string(n), t);
                Poly a = random_poly(hash_mix(s, 1), n, cfg.base_deg);
                Poly b = random_poly(hash_mix(s, 2), n, cfg.base_deg);
                auto pt = random_point(hash_mix(s, 3), n);
                if ((a * b).eval(pt) != a.eval(pt) * b.eval(pt)) chk.fail("eval(ab) != eval a eval b");
                if ((a + b).eval(pt) != a.eval(pt) + b.eval(pt)) chk.fail("eval(a+b) mismatch");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// weighted_symbols: the Vect action
// ---------------------------------------------------------------------------

inline void suite_lie(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        for (const Rational& d : cfg.deltas) {
            Check chk(rep, "lie/bracket-representation", params_nd(n, d));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "lie/bracket-representation",
                                            std::to_string(n) + to_string(d), t);
                PolyVectorField z = random_vector_field(hash_mix(s, 1), n, 2);
                PolyVectorField w = random_vector_field(hash_mix(s, 2), n, 2);
                int k = t % (cfg.k_max + 1);
                Symbol u = random_symbol(hash_mix(s, 3), n, k, d, cfg.base_deg, Grading::S);
                Symbol lhs = lie_derivative_symbol(z, lie_derivative_symbol(w, u));
                lhs.poly -= lie_derivative_symbol(w, lie_derivative_symbol(z, u)).poly;
                Symbol rhs = lie_derivative_symbol(bracket(z, w), u);
                if (lhs.poly != rhs.poly)
                    chk.fail("L_Z L_W - L_W L_Z != L_[Z,W] on" + show(u));
            }
        }
        {
            Check chk(rep, "lie/density-consistency", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "lie/density-consistency", std::to_string(n), t);
                PolyVectorField z = random_vector_field(hash_mix(s, 1), n, 2);
                Poly f = random_density(hash_mix(s, 2), n, cfg.base_deg);
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                Symbol u(n, Weight{d}, Grading::S, f);
                if (lie_derivative_symbol(z, u).poly != lie_derivative_density(z, f, Weight{d}))
                    chk.fail("fiber-degree-0 action disagrees with the density action");
            }
        }
        {
            Check chk(rep, "lie/preserves-grading", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "lie/preserves-grading", std::to_string(n), t);
                PolyVectorField z = random_vector_field(hash_mix(s, 1), n, 2);
                int k = t % (cfg.k_max + 1);
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                Symbol u = random_symbol(hash_mix(s, 2), n, k, d, cfg.base_deg, Grading::S);
                Symbol lu = lie_derivative_symbol(z, u);
                if (lu.weight != u.weight) chk.fail("weight changed");
                if (!lu.is_zero() && (!lu.is_fiber_homogeneous() || lu.fiber_degree() != k))
                    chk.fail("fiber degree changed on" + show(u));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// contact_structure
// ---------------------------------------------------------------------------

inline void suite_contact(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        {
            Check chk(rep, "contact/nondegenerate", params_n(n));
            ContactForm alpha = ContactForm::standard(n);
            if (alpha.volume_coefficient().is_zero()) chk.fail("alpha ^ (d alpha)^n vanished");
        }
        {
            Check chk(rep, "contact/hamiltonian-fields-contact", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s =
                    cell_seed(cfg, "contact/hamiltonian-fields-contact", std::to_string(n), t);
                Poly f = random_density(s, n, 4);
                PolyVectorField z = contact_field(f);
                if (!is_contact(z).contact)
                    chk.fail("X(f) failed the contact test for f = " + f.str());
            }
        }
        {
            Check chk(rep, "contact/lagrange-invariance", params_n(n));
            AlgebraBasis sp = sp_generators(n);
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s =
                    cell_seed(cfg, "contact/lagrange-invariance", std::to_string(n), t);
                PolyVectorField z = (t % 2 == 0)
                                        ? sp.elements[t / 2 % sp.elements.size()]
                                        : contact_field(random_density(hash_mix(s, 9), n, 4));
                Poly f = random_density(hash_mix(s, 1), n, cfg.base_deg);
                Poly g = random_density(hash_mix(s, 2), n, cfg.base_deg);
                Weight lam{cfg.deltas[t % cfg.deltas.size()]};
                Weight mu{cfg.deltas[(t + 1) % cfg.deltas.size()]};
                Density br = lagrange_bracket(f, lam, g, mu);
                Poly lhs = lie_derivative_density(z, br.poly, br.weight);
                Poly rhs = lagrange_bracket(lie_derivative_density(z, f, lam), lam, g, mu).poly +
                           lagrange_bracket(f, lam, lie_derivative_density(z, g, mu), mu).poly;
                if (lhs != rhs)
                    chk.fail("Leibniz rule failed along " + z.str() + " for f = " + f.str() +
                             ", g = " + g.str());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Algebra sanity: counts, contact property, closure, spans
// ---------------------------------------------------------------------------

namespace detail {

/// Coefficient vector of a field over (component, base monomial) pairs.
inline SparseVec field_to_vec(const PolyVectorField& z,
                              const std::map<Monomial, int, GrlexLess>& mono_index) {
    SparseVec v;
    int stride = static_cast<int>(mono_index.size());
    for (int i = 0; i < num_base_vars(z.n()); ++i) {
        for (const auto& [m, c] : z.component(i).terms()) {
            auto it = mono_index.find(m);
            if (it == mono_index.end())
                throw DomainError("field coefficient leaves the monomial window");
            v.emplace(i * stride + it->second, c);
        }
    }
    return v;
}

inline std::map<Monomial, int, GrlexLess> base_monomial_index(int n, int max_degree) {
    std::map<Monomial, int, GrlexLess> out;
    for (const Poly& p : base_monomials_up_to_degree(n, max_degree))
        out.emplace(p.terms().begin()->first, 0);
    int i = 0;
    for (auto& [m, idx] : out) idx = i++;
    return out;
}

}  // namespace detail

inline void suite_algebra(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        AlgebraBasis sp = sp_generators(n);
        AlgebraBasis sl = sl_generators(n);
        auto window = base_monomial_index(n, 4);
        {
            Check chk(rep, "algebra/sp-count", params_n(n));
            if (static_cast<int>(sp.elements.size()) != (n + 1) * (2 * n + 3))
                chk.fail("expected " + std::to_string((n + 1) * (2 * n + 3)) + " generators, got " +
                         std::to_string(sp.elements.size()));
        }
        {
            Check chk(rep, "algebra/sp-contact", params_n(n));
            for (const auto& z : sp.elements) {
                if (!is_contact(z).contact) {
                    chk.fail("generator is not contact: " + z.str());
                    break;
                }
            }
        }
        SparseEliminator sp_span;
        for (const auto& z : sp.elements) sp_span.add(field_to_vec(z, window));
        {
            Check chk(rep, "algebra/sp-closure", params_n(n));
            if (sp_span.rank() != sp.expected_rank)
                chk.fail("generators have rank " + std::to_string(sp_span.rank()) +
                         ", expected " + std::to_string(sp.expected_rank));
            for (std::size_t i = 0; i < sp.elements.size() && !chk.failed(); ++i) {
                for (std::size_t j = i + 1; j < sp.elements.size(); ++j) {
                    PolyVectorField br = bracket(sp.elements[i], sp.elements[j]);
                    if (!sp_span.in_span(field_to_vec(br, window))) {
                        chk.fail("bracket left the span: [" + sp.elements[i].str() + ", " +
                                 sp.elements[j].str() + "]");
                        break;
                    }
                }
            }
        }
        SparseEliminator sl_span;
        for (const auto& z : sl.elements) sl_span.add(field_to_vec(z, window));
        {
            Check chk(rep, "algebra/sl-rank", params_n(n));
            if (sl_span.rank() != sl.expected_rank)
                chk.fail("spanning family has rank " + std::to_string(sl_span.rank()) +
                         ", expected " + std::to_string(sl.expected_rank));
        }
        {
            Check chk(rep, "algebra/sp-in-sl", params_n(n));
            for (const auto& z : sp.elements) {
                if (!sl_span.in_span(field_to_vec(z, window))) {
                    chk.fail("sp generator outside the projective span: " + z.str());
                    break;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle cross-checks for the Hamiltonian operator
// ---------------------------------------------------------------------------

inline void suite_oracle(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        {
            Check chk(rep, "oracle/x-fiber0-restriction", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s =
                    cell_seed(cfg, "oracle/x-fiber0-restriction", std::to_string(n), t);
                Poly f = random_density(s, n, cfg.base_deg);
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                Symbol u(n, Weight{d}, Grading::S, f);
                Symbol via_x = big_X(u);
                Symbol via_h = hamiltonian_density(f, Weight{d});
                if (via_x != via_h)
                    chk.fail("X on fiber degree 0 disagrees with the density Hamiltonian for f = " +
                             f.str());
            }
        }
        {
            // Independent route: read the first-order coefficients off the
            // Lagrange bracket with probe densities, A^j = {f, x^j} - {f, 1} x^j.
            Check chk(rep, "oracle/bracket-extraction", params_n(n));
            Weight probe_mu{Rational(1, 3)};
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                std::uint64_t s = cell_seed(cfg, "oracle/bracket-extraction", std::to_string(n), t);
                Poly f = random_density(s, n, cfg.base_deg);
                Weight lam{cfg.deltas[t % cfg.deltas.size()]};
                Poly zeroth = lagrange_bracket(f, lam, Poly::constant(n, Rational(1)), probe_mu).poly;
                Poly assembled(n);
                for (int j = 0; j < num_base_vars(n); ++j) {
                    Poly xj = Poly::variable(n, j);
                    Poly aj = lagrange_bracket(f, lam, xj, probe_mu).poly - zeroth * xj;
                    assembled += aj * Poly::variable(n, xi_var(n, j));
                }
                Symbol direct = hamiltonian_density(f, lam);
                if (direct.poly != assembled)
                    chk.fail("first-order extraction of the bracket disagrees for f = " + f.str());
                if (direct.weight.value != lam.value + Rational(1, n + 1))
                    chk.fail("output weight is not lambda + 1/(n+1)");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// sl(2) structure of i(alpha), X, H on R_delta
// ---------------------------------------------------------------------------

inline void suite_sl2(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        LinearOperator IA = op_i_alpha(n), X = op_X(n), H = op_H(n);
        for (const Rational& d : cfg.deltas) {
            Check rel1(rep, "sl2/bracket-ialpha-x", params_nd(n, d));
            Check rel2(rep, "sl2/bracket-h-ialpha", params_nd(n, d));
            Check rel3(rep, "sl2/bracket-h-x", params_nd(n, d));
            Check nil(rep, "sl2/nilpotency", params_nd(n, d));
            Check lem1(rep, "sl2/lemma-ialpha-transport", params_nd(n, d));
            Check lem2(rep, "sl2/lemma-ialpha-xit", params_nd(n, d));
            for (int k = 0; k <= cfg.k_max; ++k) {
                for (int t = 0; t < cfg.trials; ++t) {
                    std::uint64_t s = cell_seed(cfg, "sl2",
                                                std::to_string(n) + "|" + to_string(d) + "|" +
                                                    std::to_string(k),
                                                t);
                    Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                    if (!rel1.failed() && commutator(IA, X)(u) != H(u))
                        rel1.fail("[i(alpha), X] != H on" + show(u));
                    if (!rel2.failed() && commutator(H, IA)(u) != IA(u))
                        rel2.fail("[H, i(alpha)] != i(alpha) on" + show(u));
                    if (!rel3.failed() && commutator(H, X)(u) != (Rational(-1) * X)(u))
                        rel3.fail("[H, X] != -X on" + show(u));
                    if (!nil.failed() && !op_pow(IA, k + 1)(u).is_zero())
                        nil.fail("i(alpha)^{k+1} != 0 on" + show(u));
                    if (!lem1.failed()) {
                        Symbol lhs = commutator(IA, op_D(n))(u);
                        Symbol rhs =
                            ((Rational(-1, 2) * op_E_xi(n)) - compose(op_mult_xi_t(n), IA))(u);
                        if (lhs != rhs)
                            lem1.fail("[i(alpha), D] != -E_xi/2 - xi_t i(alpha) on" + show(u));
                    }
                    if (!lem2.failed()) {
                        Symbol lhs = commutator(IA, op_mult_xi_t(n))(u);
                        Symbol rhs = u;
                        rhs.poly *= Rational(-1, 2);
                        if (lhs != rhs) lem2.fail("[i(alpha), xi_t] != -Id/2 on" + show(u));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Power commutators i(alpha) X^l and X i(alpha)^l
// ---------------------------------------------------------------------------

inline void suite_power(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        for (const Rational& d : cfg.deltas) {
            StructureConstants sc{n, d};
            Check up(rep, "power/raising", params_nd(n, d));
            Check down(rep, "power/lowering", params_nd(n, d));
            for (int k = 0; k <= cfg.k_max; ++k) {
                for (int t = 0; t < cfg.trials; ++t) {
                    if (up.failed() && down.failed()) break;
                    std::uint64_t s = cell_seed(cfg, "power",
                                                std::to_string(n) + "|" + to_string(d) + "|" +
                                                    std::to_string(k),
                                                t);
                    Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                    // chains shared across l
                    std::vector<Symbol> xu = {u};        // X^j u
                    std::vector<Symbol> xiu = {i_alpha(u)};  // X^j i(alpha) u
                    std::vector<Symbol> iu = {u};        // i(alpha)^j u
                    std::vector<Symbol> ixu = {big_X_mixed(u)};  // i(alpha)^j X u
                    for (int l = 1; l <= k + 1; ++l) {
                        xu.push_back(big_X_mixed(xu.back()));
                        xiu.push_back(big_X_mixed(xiu.back()));
                        iu.push_back(i_alpha(iu.back()));
                        ixu.push_back(i_alpha(ixu.back()));
                    }
                    for (int l = 1; l <= k + 1 && !up.failed(); ++l) {
                        Symbol lhs = i_alpha(xu[l]);
                        lhs.poly -= xiu[l - 1].poly;  // X^l i(alpha) u
                        Symbol rhs = xu[l - 1];
                        rhs.poly *= sc.r(l, k);
                        if (lhs.poly != rhs.poly)
                            up.fail("i(alpha) X^l - X^l i(alpha) != r(l,k) X^{l-1}, l = " +
                                    std::to_string(l) + ", on" + show(u));
                    }
                    for (int l = 1; l <= k + 1 && !down.failed(); ++l) {
                        Symbol lhs = big_X_mixed(iu[l]);
                        lhs.poly -= ixu[l].poly;  // i(alpha)^l X u
                        Symbol rhs = iu[l - 1];
                        rhs.poly *= -sc.r(l, k - l + 1);
                        if (lhs.poly != rhs.poly)
                            down.fail("X i(alpha)^l - i(alpha)^l X != -r(l,k-l+1) i(alpha)^{l-1}" +
                                      std::string(", l = ") + std::to_string(l) + ", on" + show(u));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Invariance statements
// ---------------------------------------------------------------------------

inline void suite_ialpha_invariance(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        Check chk(rep, "ialpha-invariance/contact-fields", params_n(n));
        LinearOperator IA = op_i_alpha(n);
        for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
            std::uint64_t s =
                cell_seed(cfg, "ialpha-invariance/contact-fields", std::to_string(n), t);
            Poly f = random_density(hash_mix(s, 1), n, 4);
            LinearOperator LZ = op_lie(contact_field(f));
            LinearOperator com = commutator(LZ, IA);
            for (int k = 0; k <= cfg.k_max && !chk.failed(); ++k) {
                const Rational& d = cfg.deltas[(t + k) % cfg.deltas.size()];
                Symbol u = random_symbol(hash_mix(s, 100 + k), n, k, d, cfg.base_deg, Grading::R);
                if (!com(u).is_zero())
                    chk.fail("[L_{X(f)}, i(alpha)] != 0 for f = " + f.str() + " on" + show(u));
            }
        }
    }
}

inline void suite_x_invariance(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        Check chk(rep, "x-invariance/sp-generators", params_n(n));
        AlgebraBasis sp = sp_generators(n);
        LinearOperator X = op_X(n);
        for (std::size_t g = 0; g < sp.elements.size() && !chk.failed(); ++g) {
            LinearOperator com = commutator(op_lie(sp.elements[g]), X);
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                int k = t % (cfg.k_max + 1);
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                std::uint64_t s = cell_seed(cfg, "x-invariance/sp-generators",
                                            std::to_string(n) + "|" + std::to_string(g), t);
                Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                if (!com(u).is_zero())
                    chk.fail("[L_Z, X] != 0 for Z = " + sp.elements[g].str() + " on" + show(u));
            }
        }
    }
}

inline void suite_x_noninvariance(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        Poly q1 = Poly::variable(n, q_var(n, 0));
        LinearOperator LZ = op_lie(contact_field(q1 * q1 * q1));
        LinearOperator com = commutator(LZ, op_X(n));
        for (int k = 1; k <= cfg.k_max; ++k) {
            Check chk(rep, "x-noninvariance/witness",
                      {{"n", std::to_string(n)}, {"k", std::to_string(k)}});
            bool found = false;
            std::string last;
            for (int t = 0; t < cfg.trials && !found; ++t) {
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                std::uint64_t s = cell_seed(cfg, "x-noninvariance/witness",
                                            std::to_string(n) + "|" + std::to_string(k), t);
                Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                last = show(u);
                if (!com(u).is_zero()) found = true;
            }
            if (!found)
                chk.fail("[L_{X(q1^3)}, X] vanished on every trial symbol of degree " +
                         std::to_string(k) + "; last" + last);
        }
        {
            Check chk(rep, "x-noninvariance/degree-zero", params_n(n));
            for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                const Rational& d = cfg.deltas[t % cfg.deltas.size()];
                std::uint64_t s =
                    cell_seed(cfg, "x-noninvariance/degree-zero", std::to_string(n), t);
                Symbol u = random_symbol(s, n, 0, d, cfg.base_deg, Grading::R);
                if (!com(u).is_zero())
                    chk.fail("[L_{X(q1^3)}, X] != 0 on fiber degree 0:" + show(u));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Projector, section, decomposition
// ---------------------------------------------------------------------------

inline void suite_projector(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    {
        Check chk(rep, "projector/worked-coefficients", params_nd(1, Rational(1)));
        StructureConstants sc{1, Rational(1)};
        if (coeff_b(2, 1, sc) != Rational(1, 3)) chk.fail("b_{2,1} != 1/3");
        if (coeff_b(2, 2, sc) != Rational(1, 15)) chk.fail("b_{2,2} != 1/15");
        if (coeff_b(1, 1, sc) != Rational(1, 2)) chk.fail("b_{1,1} != 1/((n+1) delta)");
    }
    for (int n : cfg.ns) {
        for (int k = 1; k <= cfg.k_max; ++k) {
            for (const Rational& d : cfg.deltas) {
                StructureConstants sc{n, d};
                Check idem(rep, "projector/idempotent", params_nkd(n, k, d));
                Check ann(rep, "projector/annihilation", params_nkd(n, k, d));
                Check fix(rep, "projector/kernel-fixed", params_nkd(n, k, d));
                if (check_singular(k, sc).singular) {
                    idem.skip(kSingularSkip);
                    ann.skip(kSingularSkip);
                    fix.skip(kSingularSkip);
                    continue;
                }
                Projector p(k, sc);
                for (int t = 0; t < cfg.trials; ++t) {
                    std::uint64_t s = cell_seed(cfg, "projector",
                                                std::to_string(n) + "|" + std::to_string(k) + "|" +
                                                    to_string(d),
                                                t);
                    Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                    Symbol pu = p(u);
                    if (!idem.failed() && p(pu) != pu) idem.fail("p(p(u)) != p(u) on" + show(u));
                    if (!ann.failed() && !i_alpha(pu).is_zero())
                        ann.fail("i(alpha) p(u) != 0 on" + show(u));
                    if (!fix.failed()) {
                        Symbol w = p(random_symbol(hash_mix(s, 17), n, k, d, cfg.base_deg,
                                                   Grading::R));
                        if (p(w) != w) fix.fail("projector moves a kernel element" + show(w));
                    }
                    if (idem.failed() && ann.failed() && fix.failed()) break;
                }
            }
        }
    }
}

inline void suite_section(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        for (int k = 1; k <= cfg.k_max; ++k) {
            for (const Rational& d : cfg.deltas) {
                StructureConstants sc{n, d};
                Check chk(rep, "section/right-inverse", params_nkd(n, k, d));
                if (check_singular(k, sc).singular) {
                    chk.skip(kSingularSkip);
                    continue;
                }
                Section s(k - 1, sc);
                for (int t = 0; t < cfg.trials && !chk.failed(); ++t) {
                    std::uint64_t seed = cell_seed(cfg, "section",
                                                   std::to_string(n) + "|" + std::to_string(k) +
                                                       "|" + to_string(d),
                                                   t);
                    Symbol u = random_symbol(seed, n, k - 1, d, cfg.base_deg, Grading::R);
                    if (i_alpha(s(u)) != u)
                        chk.fail("i(alpha) s_{k-1} != Id on" + show(u));
                }
            }
        }
    }
}

inline void suite_decomposition(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        for (int k = 1; k <= cfg.k_max; ++k) {
            for (const Rational& d : cfg.deltas) {
                StructureConstants sc{n, d};
                Check round(rep, "decomposition/roundtrip", params_nkd(n, k, d));
                Check kern(rep, "decomposition/kernel-components", params_nkd(n, k, d));
                Check cs(rep, "decomposition/c-scalar", params_nkd(n, k, d));
                Check uniq(rep, "decomposition/uniqueness", params_nkd(n, k, d));
                bool singular = false;
                for (int j = 1; j <= k; ++j)
                    if (check_singular(j, sc).singular) singular = true;
                if (singular) {
                    round.skip(kSingularSkip);
                    kern.skip(kSingularSkip);
                    cs.skip(kSingularSkip);
                    uniq.skip(kSingularSkip);
                    continue;
                }
                for (int t = 0; t < cfg.trials; ++t) {
                    std::uint64_t s = cell_seed(cfg, "decomposition",
                                                std::to_string(n) + "|" + std::to_string(k) + "|" +
                                                    to_string(d),
                                                t);
                    Symbol u = random_symbol(s, n, k, d, cfg.base_deg, Grading::R);
                    DecompositionResult dr = decompose(u);
                    if (!round.failed() && reconstruct(dr) != u)
                        round.fail("reconstruct(decompose(u)) != u on" + show(u));
                    if (!kern.failed()) {
                        for (const Symbol& comp : dr.components) {
                            if (!i_alpha(comp).is_zero()) {
                                kern.fail("component escapes ker i(alpha) on" + show(u));
                                break;
                            }
                        }
                    }
                    if (!cs.failed()) {
                        for (int l = 0; l <= dr.k; ++l) {
                            Symbol via_s = dr.components[l];
                            for (int j = dr.k - l; j <= dr.k - 1; ++j)
                                via_s = Section(j, sc)(via_s);
                            Symbol via_x = dr.components[l];
                            for (int j = 0; j < l; ++j) via_x = big_X(via_x);
                            via_x.poly *= coeff_c(l, dr.k - l, sc);
                            if (via_s.poly != via_x.poly) {
                                cs.fail("s^l != c(l,k-l) X^l on the kernel component l = " +
                                        std::to_string(l) + " of" + show(u));
                                break;
                            }
                        }
                    }
                    if (!uniq.failed()) {
                        // u' = w + s_{k-1}(v) with w in the kernel must peel back
                        Projector p(k, sc);
                        Section s_sec(k - 1, sc);
                        Symbol w = p(random_symbol(hash_mix(s, 5), n, k, d, cfg.base_deg,
                                                   Grading::R));
                        Symbol v = random_symbol(hash_mix(s, 6), n, k - 1, d, cfg.base_deg,
                                                 Grading::R);
                        Symbol mixed = w;
                        mixed.poly += s_sec(v).poly;
                        if (p(mixed) != w || i_alpha(mixed) != v)
                            uniq.fail("w + s(v) did not peel back to (w, v)");
                    }
                    if (round.failed() && kern.failed() && cs.failed() && uniq.failed()) break;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Filtration F^{k,l}
// ---------------------------------------------------------------------------

namespace detail {

/// Random element of F^{k,l} built per the splitting: a kernel element is
/// projected out of a random symbol, raised with X^{l-1}, and summed with
/// a member of the lower filter.
inline Symbol random_filtration_member(std::uint64_t seed, int n, int k, int l,
                                       const StructureConstants& sc, int B) {
    if (l <= 0 || k < 0) return Symbol::zero(n, Weight{sc.delta}, Grading::R);
    Projector p(k - l + 1, sc);
    Symbol w = p(random_symbol(hash_mix(seed, l), n, k - l + 1, sc.delta, B, Grading::R));
    for (int j = 0; j < l - 1; ++j) w = big_X(w);
    if (l > 1) w.poly += random_filtration_member(hash_mix(seed, 1000 + l), n, k, l - 1, sc, B).poly;
    return w;
}

}  // namespace detail

inline void suite_filtration(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        for (const Rational& d : cfg.deltas) {
            StructureConstants sc{n, d};
            bool singular = false;
            for (int j = 1; j <= cfg.k_max; ++j)
                if (check_singular(j, sc).singular) singular = true;
            Check incl(rep, "filtration/inclusions", params_nd(n, d));
            Check grid(rep, "filtration/graded-identity", params_nd(n, d));
            if (singular) {
                incl.skip(kSingularSkip);
                grid.skip(kSingularSkip);
                continue;
            }
            int trials_per_cell = std::max(1, cfg.trials / 5);
            for (int k = 1; k <= cfg.k_max; ++k) {
                for (int l = 1; l <= k + 1; ++l) {
                    for (int t = 0; t < trials_per_cell; ++t) {
                        std::uint64_t s = cell_seed(cfg, "filtration",
                                                    std::to_string(n) + "|" + to_string(d) + "|" +
                                                        std::to_string(k) + "|" + std::to_string(l),
                                                    t);
                        Symbol u = random_filtration_member(s, n, k, l, sc, cfg.base_deg);
                        if (!in_filtration(u, l)) {
                            incl.fail("constructed member escapes F^{k,l}" + show(u));
                            continue;
                        }
                        if (!incl.failed()) {
                            if (!in_filtration(i_alpha(u), l - 1))
                                incl.fail("i(alpha) F^{k,l} escapes F^{k-1,l-1}" + show(u));
                            if (!in_filtration(big_X(u), l + 1))
                                incl.fail("X F^{k,l} escapes F^{k+1,l+1}" + show(u));
                        }
                        if (!grid.failed() && !graded_inverse_check(u, l))
                            grid.fail("graded identity fails at k = " + std::to_string(k) +
                                      ", l = " + std::to_string(l) + " on" + show(u));
                    }
                }
            }
        }
    }
}

inline void suite_splitting_ranks(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        int wcap = n == 1 ? 12 : 5;
        for (int k = 1; k <= cfg.k_max; ++k) {
            int wmax = std::min(2 * cfg.base_deg + k, wcap);
            for (int l = 2; l <= k + 1; ++l) {
                std::vector<SplittingSlice> slices;
                slices.reserve(wmax + 1);
                for (int w = 0; w <= wmax; ++w) slices.push_back(prepare_splitting_slice(n, k, l, w));
                for (const Rational& d : cfg.deltas) {
                    Check chk(rep, "filtration/splitting-ranks",
                              {{"n", std::to_string(n)},
                               {"k", std::to_string(k)},
                               {"l", std::to_string(l)},
                               {"delta", to_string(d)},
                               {"wdeg_max", std::to_string(wmax)}});
                    bool any_applicable = false;
                    for (int w = 0; w <= wmax && !chk.failed(); ++w) {
                        SplittingCheck res = check_filtration_splitting(slices[w], d);
                        if (!res.applicable) break;  // same for every w
                        any_applicable = true;
                        if (!res.pass)
                            chk.fail("rank accounting failed on the slice w = " +
                                     std::to_string(w) + ": dim F^{k,l} = " +
                                     std::to_string(res.dim_fkl) + ", dim F^{k,l-1} = " +
                                     std::to_string(res.dim_fkl1) + ", dim X^{l-1}(...) = " +
                                     std::to_string(res.dim_image));
                    }
                    if (!any_applicable && !chk.failed())
                        chk.skip("skipped: vanishing r factor (no splitting claimed)");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The degree-one splitting into contact fields and tangent fields
// ---------------------------------------------------------------------------

inline void suite_splitting(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    const int n = 1;
    StructureConstants sc{n, Rational(-1, n + 1)};
    ContactForm alpha = ContactForm::standard(n);
    Check contact_part(rep, "splitting/contact-part", params_n(n));
    Check tangent_part(rep, "splitting/tangent-part", params_n(n));
    Check round(rep, "splitting/roundtrip", params_n(n));
    Section s0(0, sc);
    for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t s = cell_seed(cfg, "splitting", "n=1", t);
        Symbol field = random_symbol(s, n, 1, Rational(0), cfg.base_deg, Grading::S);
        Symbol u = to_R_grading(field);  // R-weight -1/(n+1), outside I_1 = {0}
        DecompositionResult dr = decompose(u);
        const Symbol& w = dr.components[0];
        const Symbol& v = dr.components[1];
        Symbol lifted = s0(v);
        if (!contact_part.failed()) {
            PolyVectorField zc = PolyVectorField::from_symbol(from_R_grading(lifted));
            if (!is_contact(zc).contact)
                contact_part.fail("complement component is not a contact field" + show(field));
        }
        if (!tangent_part.failed()) {
            PolyVectorField zt = PolyVectorField::from_symbol(from_R_grading(w));
            if (!i_alpha(w).is_zero() || !alpha.pairing(zt).is_zero())
                tangent_part.fail("kernel component is not tangent to the distribution" +
                                  show(field));
        }
        if (!round.failed()) {
            Symbol sum = w;
            sum.poly += lifted.poly;
            if (sum != u) round.fail("kernel + section parts do not reproduce the field" +
                                     show(field));
        }
        if (contact_part.failed() && tangent_part.failed() && round.failed()) break;
    }
}

// ---------------------------------------------------------------------------
// Singular weights
// ---------------------------------------------------------------------------

inline void suite_singular(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    for (int n : cfg.ns) {
        {
            Check chk(rep, "singular/sets", params_n(n));
            for (int k = 1; k <= cfg.k_max && !chk.failed(); ++k) {
                auto set = singular_set(k, n);
                if (static_cast<int>(set.size()) != k)
                    chk.fail("I_k must have k elements at k = " + std::to_string(k));
            }
            if (n == 1 && !chk.failed()) {
                if (singular_set(1, 1) != std::vector<Rational>{Rational(0)})
                    chk.fail("I_1 != {0}");
                if (singular_set(2, 1) != std::vector<Rational>({Rational(-1, 4), Rational(-1, 2)}))
                    chk.fail("I_2 != {-1/4, -1/2}");
                if (singular_set(3, 1) !=
                    std::vector<Rational>({Rational(-1, 2), Rational(-3, 4), Rational(-1)}))
                    chk.fail("I_3 != {-1/2, -3/4, -1}");
            }
        }
        // every singular delta up to k_max, plus the panel values
        std::vector<Rational> grid = cfg.deltas;
        for (int k = 1; k <= cfg.k_max; ++k)
            for (const Rational& d : singular_set(k, n))
                if (std::find(grid.begin(), grid.end(), d) == grid.end()) grid.push_back(d);
        for (int k = 1; k <= cfg.k_max; ++k) {
            Check chk(rep, "singular/constructor-errors",
                      {{"n", std::to_string(n)}, {"k", std::to_string(k)}});
            auto ik = singular_set(k, n);
            for (const Rational& d : grid) {
                bool expect = std::find(ik.begin(), ik.end(), d) != ik.end();
                StructureConstants sc{n, d};
                bool threw_p = false, threw_s = false;
                try {
                    Projector p(k, sc);
                } catch (const SingularWeightError&) {
                    threw_p = true;
                }
                try {
                    Section s(k - 1, sc);
                } catch (const SingularWeightError&) {
                    threw_s = true;
                }
                if (threw_p != expect || threw_s != expect) {
                    chk.fail("constructors at delta = " + to_string(d) +
                             (expect ? " must raise" : " must not raise") +
                             " the singular-weight error");
                    break;
                }
            }
        }
        {
            Check chk(rep, "singular/detection-agreement", params_n(n));
            for (int k = 1; k <= cfg.k_max && !chk.failed(); ++k) {
                for (const Rational& d : grid) {
                    StructureConstants sc{n, d};
                    bool eager = check_singular(k, sc).singular;
                    bool lazy = false;
                    for (int j = 1; j <= k; ++j)
                        if (sc.r(j, k - j) == 0) lazy = true;
                    if (eager != lazy) {
                        chk.fail("membership in I_k and vanishing r factors disagree at delta = " +
                                 to_string(d) + ", k = " + std::to_string(k));
                        break;
                    }
                }
            }
        }
        {
            // The i(alpha) matrix never involves delta, so slice surjectivity
            // covers the singular weights as well.
            Check chk(rep, "singular/surjectivity",
                      {{"n", std::to_string(n)},
                       {"wdeg_max", std::to_string(n == 1 ? 8 : 4)}});
            int wmax = n == 1 ? 8 : 4;
            for (int k = 1; k <= cfg.k_max && !chk.failed(); ++k) {
                for (int w = 0; w <= wmax; ++w) {
                    if (!check_ialpha_surjective_on_slice(n, k, w)) {
                        chk.fail("i(alpha): R^k -> R^{k-1} not onto the slice k = " +
                                 std::to_string(k) + ", w = " + std::to_string(w));
                        break;
                    }
                }
            }
        }
    }
}

inline void suite_negative_control(const SuiteConfig& cfg, Report& rep) {
    using namespace detail;
    Check chk(rep, "negative-control/corrupted-projector", params_nkd(1, 2, Rational(1)));
    StructureConstants sc{1, Rational(1)};
    std::vector<Rational> bad = {coeff_b(2, 1, sc) + 1, coeff_b(2, 2, sc)};
    Projector corrupted = Projector::with_coefficients(2, sc, bad);
    bool caught = false;
    for (int t = 0; t < cfg.trials && !caught; ++t) {
        std::uint64_t s = cell_seed(cfg, "negative-control", "1|2|1", t);
        Symbol u = random_symbol(s, 1, 2, Rational(1), cfg.base_deg, Grading::R);
        Symbol pu = corrupted(u);
        if (corrupted(pu) != pu) caught = true;
    }
    if (!caught)
        chk.fail("idempotence test failed to flag a corrupted b_{2,1}; the harness is blind");
}

// ---------------------------------------------------------------------------

inline Report run_suite(const SuiteConfig& cfg) {
    for (const std::string& s : cfg.suites) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw DomainError("unknown suite '" + s + "'");
    }
    Report rep;
    rep.config = cfg;
    if (cfg.wants("ring")) suite_ring(cfg, rep);
    if (cfg.wants("lie")) suite_lie(cfg, rep);
    if (cfg.wants("contact")) suite_contact(cfg, rep);
    if (cfg.wants("algebra")) suite_algebra(cfg, rep);
    if (cfg.wants("oracle")) suite_oracle(cfg, rep);
    if (cfg.wants("sl2")) suite_sl2(cfg, rep);
    if (cfg.wants("power")) suite_power(cfg, rep);
    if (cfg.wants("ialpha-invariance")) suite_ialpha_invariance(cfg, rep);
    if (cfg.wants("x-invariance")) suite_x_invariance(cfg, rep);
    if (cfg.wants("x-noninvariance")) suite_x_noninvariance(cfg, rep);
    if (cfg.wants("projector")) suite_projector(cfg, rep);
    if (cfg.wants("section")) suite_section(cfg, rep);
    if (cfg.wants("decomposition")) suite_decomposition(cfg, rep);
    if (cfg.wants("filtration")) {
        suite_filtration(cfg, rep);
        suite_splitting_ranks(cfg, rep);
    }
    if (cfg.wants("splitting")) suite_splitting(cfg, rep);
    if (cfg.wants("singular")) suite_singular(cfg, rep);
    if (cfg.wants("negative-control")) suite_negative_control(cfg, rep);
    rep.sort_checks();
    return rep;
}

}  // namespace verify
}  // namespace contactsym
