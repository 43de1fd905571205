#pragma once

#include "tropdisc/system.hpp"

#include <random>

namespace tropdisc::testutil {

// Random valid reduced system with n <= 3 and N <= 6, entries in [-3, 3].
// require_positive_det restricts to systems whose omega matrix has positive
// determinant, the setting of the closed-form parametrization display.
inline SystemSpec random_spec(std::mt19937_64& rng, bool require_positive_det = false) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> npick(1, 3);
    std::uniform_int_distribution<int> kpick(1, 2);
    for (;;) {
        SystemSpec s;
        s.n = npick(rng);
        for (int i = 0; i < s.n; ++i) {
            Equation eq;
            eq.omega.resize(s.n);
            for (int r = 0; r < s.n; ++r) eq.omega[r] = entry(rng);
            int cols = kpick(rng);
            for (int j = 0; j < cols; ++j) {
                IntVector lam(s.n);
                for (int r = 0; r < s.n; ++r) lam[r] = entry(rng);
                eq.lambda.push_back(std::move(lam));
            }
            s.equations.push_back(std::move(eq));
        }
        try {
            validate(s);
        } catch (const std::exception&) {
            continue;
        }
        if (require_positive_det) {
            IntMatrix omega(s.n, s.n);
            for (int i = 0; i < s.n; ++i)
                for (int r = 0; r < s.n; ++r) omega.at(r, i) = s.equations[i].omega[r];
            if (det(omega) <= 0) continue;
        }
        return s;
    }
}

}  // namespace tropdisc::testutil
