#include "tau_oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace heckelab::testing {

std::vector<__int128> naive_tau(uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("n_max must be positive");
    const std::size_t L = n_max;  // coefficients 0..L-1 of the 24th power

    // pentagonal series: 1 + sum_{k>=1} (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2})
    std::vector<std::pair<std::size_t, int>> penta{{0, 1}};
    for (uint64_t k = 1;; ++k) {
        const uint64_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= L && g2 >= L) break;
        const int sign = k % 2 ? -1 : 1;
        if (g1 < L) penta.emplace_back(std::size_t(g1), sign);
        if (g2 < L) penta.emplace_back(std::size_t(g2), sign);
    }

    std::vector<__int128> acc(L, 0), next(L, 0);
    acc[0] = 1;
    constexpr __int128 kGuard = (__int128)1 << 120;
    for (int rep = 0; rep < 24; ++rep) {
        for (auto& v : next) v = 0;
        for (const auto& [idx, sign] : penta) {
            for (std::size_t i = idx; i < L; ++i) {
                next[i] += sign > 0 ? acc[i - idx] : -acc[i - idx];
            }
        }
        for (const auto& v : next) {
            if (v >= kGuard || v <= -kGuard) throw std::overflow_error("oracle coefficient overflow");
        }
        acc.swap(next);
    }

    std::vector<__int128> tau(n_max + 1, 0);
    for (uint64_t n = 1; n <= n_max; ++n) tau[n] = acc[n - 1];
    return tau;
}

}  // namespace heckelab::testing
