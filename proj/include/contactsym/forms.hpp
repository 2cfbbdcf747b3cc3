#pragma once

#include <map>
#include <utility>
#include <vector>

#include "contactsym/poly.hpp"

namespace contactsym {

/// Differential form on the base R^{2n+1} with Poly coefficients, stored
/// on strictly increasing index tuples. Just enough exterior algebra for
/// the non-degeneracy witness alpha ^ (d alpha)^n != 0; everything else in
/// the library works on coefficient covectors directly.
class DifferentialForm {
public:
    using IndexTuple = std::vector<int>;

    DifferentialForm(int n, int degree) : n_(n), degree_(degree) {}

    static DifferentialForm one_form(const std::vector<Poly>& covector) {
        int n = covector.at(0).n();
        if (static_cast<int>(covector.size()) != num_base_vars(n))
            throw DimensionError("covector must have 2n+1 components");
        DifferentialForm out(n, 1);
        for (int j = 0; j < num_base_vars(n); ++j) out.add({j}, covector[j]);
        return out;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }

    const Poly& component(const IndexTuple& idx) const {
        static const Poly* zero = nullptr;
        auto it = comps_.find(idx);
        if (it != comps_.end()) return it->second;
        if (!zero) zero = new Poly(n_);
        return *zero;
    }

    void add(IndexTuple idx, const Poly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = comps_.try_emplace(std::move(idx), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    friend DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
        if (a.n_ != b.n_) throw DimensionError("wedge operands differ in n");
        DifferentialForm out(a.n_, a.degree_ + b.degree_);
        for (const auto& [ia, ca] : a.comps_) {
            for (const auto& [ib, cb] : b.comps_) {
                auto merged = merge_indices(ia, ib);
                if (!merged.second) continue;  // repeated index
                out.add(std::move(merged.first.first),
                        merged.first.second > 0 ? ca * cb : -(ca * cb));
            }
        }
        return out;
    }

    /// Exterior derivative (base variables only).
    DifferentialForm d() const {
        DifferentialForm out(n_, degree_ + 1);
        for (const auto& [idx, coeff] : comps_) {
            for (int i = 0; i < num_base_vars(n_); ++i) {
                Poly dc = coeff.diff(i);
                if (dc.is_zero()) continue;
                auto merged = merge_indices({i}, idx);
                if (!merged.second) continue;
                out.add(std::move(merged.first.first),
                        merged.first.second > 0 ? dc : -dc);
            }
        }
        return out;
    }

private:
    // Merges two increasing tuples; returns ((sorted tuple, sign), ok).
    static std::pair<std::pair<IndexTuple, int>, bool> merge_indices(const IndexTuple& a,
                                                                     const IndexTuple& b) {
        IndexTuple cat = a;
        cat.insert(cat.end(), b.begin(), b.end());
        int sign = 1;
        // insertion sort, counting transpositions
        for (std::size_t i = 1; i < cat.size(); ++i) {
            for (std::size_t j = i; j > 0 && cat[j] < cat[j - 1]; --j) {
                std::swap(cat[j], cat[j - 1]);
                sign = -sign;
            }
        }
        for (std::size_t i = 1; i < cat.size(); ++i)
            if (cat[i] == cat[i - 1]) return {{{}, 0}, false};
        return {{std::move(cat), sign}, true};
    }

    int n_;
    int degree_;
    std::map<IndexTuple, Poly> comps_;
};

}  // namespace contactsym
