#pragma once

#include <string>

#include "contactsym/errors.hpp"

namespace contactsym {

// Variable layout over R^{2n+1}. Base coordinates first, then their fiber
// duals, in the fixed order
//   (q^1..q^n, p^1..p^n, t, xi_{q^1}..xi_{q^n}, xi_{p^1}..xi_{p^n}, xi_t).

inline int num_base_vars(int n) { return 2 * n + 1; }
inline int num_vars(int n) { return 2 * (2 * n + 1); }

inline int q_var(int n, int i) { (void)n; return i; }              // i in [0, n)
inline int p_var(int n, int i) { return n + i; }                   // i in [0, n)
inline int t_var(int n) { return 2 * n; }
inline int xi_q_var(int n, int i) { return 2 * n + 1 + i; }
inline int xi_p_var(int n, int i) { return 2 * n + 1 + n + i; }
inline int xi_t_var(int n) { return 4 * n + 1; }

/// Fiber variable dual to the given base variable.
inline int xi_var(int n, int base_var) { return 2 * n + 1 + base_var; }

inline bool is_fiber_var(int n, int var) { return var >= 2 * n + 1; }

inline void check_var_index(int n, int var) {
    if (var < 0 || var >= num_vars(n))
        throw IndexError("variable index " + std::to_string(var) +
                         " out of range for n = " + std::to_string(n));
}

/// Display name: q1..qn, p1..pn, t, xq1.., xp1.., xt.
inline std::string var_name(int n, int var) {
    check_var_index(n, var);
    const bool fiber = is_fiber_var(n, var);
    int b = fiber ? var - (2 * n + 1) : var;
    std::string prefix = fiber ? "x" : "";
    if (b < n) return prefix + "q" + std::to_string(b + 1);
    if (b < 2 * n) return prefix + "p" + std::to_string(b - n + 1);
    return prefix + "t";
}

}  // namespace contactsym
