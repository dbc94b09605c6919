#include "hullcensus/qbinom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hullcensus {

Count gaussian_binomial(int n, int k, long q) {
    if (q < 2)
        throw std::invalid_argument("gaussian_binomial requires q >= 2");
    if (k < 0 || k > n)
        return 0;
    if (k == 0 || k == n)
        return 1;
    if (k > n - k)
        k = n - k;

    static std::mutex mu;
    static std::map<std::tuple<int, int, long>, Count> cache;
    const auto key = std::make_tuple(n, k, q);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    // r_i = [n-k+i; i]_q, so each division below is exact.
    Count r = 1;
    const Count base(q);
    for (int i = 1; i <= k; ++i) {
        r *= q_power(base, static_cast<unsigned long>(n - k + i)) - 1;
        r = exact_div(r, q_power(base, static_cast<unsigned long>(i)) - 1);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
}

bool gaussian_identities_hold(int n, int k, long q) {
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("identity suite requires 0 <= k <= n-1");
    const Count base(q);
    const Count g_nk = gaussian_binomial(n, k, q);

    // Symmetry.
    if (gaussian_binomial(n, n - k, q) != g_nk)
        return false;
    // [n+1; k] (q^{n-k+1} - 1) == [n; k] (q^{n+1} - 1)
    if (gaussian_binomial(n + 1, k, q) * (q_power(base, static_cast<unsigned long>(n - k + 1)) - 1) !=
        g_nk * (q_power(base, static_cast<unsigned long>(n + 1)) - 1))
        return false;
    // [n; k+1] (q^{k+1} - 1) == [n; k] (q^{n-k} - 1)
    if (gaussian_binomial(n, k + 1, q) * (q_power(base, static_cast<unsigned long>(k + 1)) - 1) !=
        g_nk * (q_power(base, static_cast<unsigned long>(n - k)) - 1))
        return false;
    // [n+1; k+1] (q^{k+1} - 1) == [n; k] (q^{n+1} - 1)
    if (gaussian_binomial(n + 1, k + 1, q) * (q_power(base, static_cast<unsigned long>(k + 1)) - 1) !=
        g_nk * (q_power(base, static_cast<unsigned long>(n + 1)) - 1))
        return false;
    return true;
}

} // namespace hullcensus
