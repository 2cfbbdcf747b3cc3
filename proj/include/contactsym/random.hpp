#pragma once

#include <cstdint>
#include <string>

#include "contactsym/symbol.hpp"

namespace contactsym {

/// Tiny deterministic generator (splitmix64). Fully specified here so
/// that identical seeds give identical streams on every platform and
/// standard library.
struct Splitmix64 {
    std::uint64_t state;

    explicit Splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t m) { return next() % m; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
    Splitmix64 s(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
    return s.next();
}

inline std::uint64_t hash_str(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Random rational with numerator in [-9, 9] and denominator in {1,2,3}.
inline Rational random_coefficient(Splitmix64& rng) {
    long num = rng.range(-9, 9);
    long den = rng.range(1, 3);
    return Rational(num, den);
}

/// Deterministic fiber-homogeneous symbol of degree k with base degree
/// <= B. Up to six terms; a draw may cancel to zero.
inline Symbol random_symbol(std::uint64_t seed, int n, int k, const Rational& delta, int B,
                            Grading grading) {
    if (k < 0 || B < 0) throw DomainError("k and B must be >= 0");
    Splitmix64 rng(seed);
    Poly acc(n);
    int terms = static_cast<int>(1 + rng.below(6));
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<int>(num_vars(n), 0)};
        int base_deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(B) + 1));
        for (int d = 0; d < base_deg; ++d)
            m.exps[rng.below(num_base_vars(n))] += 1;
        for (int d = 0; d < k; ++d)
            m.exps[num_base_vars(n) + rng.below(num_base_vars(n))] += 1;
        acc.add_term(m, random_coefficient(rng));
    }
    return Symbol(n, Weight{delta}, grading, std::move(acc));
}

/// Deterministic density: base variables only, degree <= B.
inline Poly random_density(std::uint64_t seed, int n, int B) {
    Splitmix64 rng(hash_mix(seed, 0x64656e73ULL));
    Poly acc(n);
    int terms = static_cast<int>(1 + rng.below(5));
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<int>(num_vars(n), 0)};
        int base_deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(B) + 1));
        for (int d = 0; d < base_deg; ++d)
            m.exps[rng.below(num_base_vars(n))] += 1;
        acc.add_term(m, random_coefficient(rng));
    }
    return acc;
}

/// Deterministic polynomial vector field with coefficient degree <= B.
inline PolyVectorField random_vector_field(std::uint64_t seed, int n, int B) {
    std::vector<Poly> comps;
    comps.reserve(num_base_vars(n));
    for (int i = 0; i < num_base_vars(n); ++i)
        comps.push_back(random_density(hash_mix(seed, 0x766620ULL + i), n, B));
    return PolyVectorField::from_components(comps);
}

}  // namespace contactsym
