#include "hullcensus/census.hpp"

#include "hullcensus/field.hpp"
#include "hullcensus/qbinom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hullcensus {

namespace {

std::string tuple_str(int n, int k, int l, long q) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
           ", q=" + std::to_string(q) + ")";
}

// The counting formulas are specific to genuine field orders; reject
// anything else up front (the even-q path would otherwise happily produce
// meaningless numbers for, say, q = 6).
void require_field_order(long q) {
    if (q < 2 || q > Field::kMaxOrder)
        throw std::invalid_argument("field order out of range: " + std::to_string(q));
    long p = 2;
    while (q % p != 0)
        ++p;
    long m = q;
    while (m > 1) {
        if (m % p != 0)
            throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        m /= p;
    }
}

/// eta((-1)^{n/2}) for odd q and even n, read off the field's character table.
int eta_of_minus_one_power(int n, long q) {
    const Field& f = field_for_order(static_cast<int>(q));
    Field::Elem value = (n / 2) % 2 == 0 ? f.one() : f.neg(f.one());
    return f.eta(value);
}

Count pw(long q, long e) {
    if (e < 0)
        throw std::logic_error("negative exponent");
    return q_power(q, static_cast<unsigned long>(e));
}

// Conversion with the dispatch branch recorded, so an inexact division
// names the mis-transcribed case directly.
Count to_count(const Ratio& r, const char* branch, int n, int k, int l, long q) {
    try {
        return ratio_to_count(r);
    } catch (const IntegralityError& e) {
        throw IntegralityError(e.dividend(), e.divisor(),
                               std::string(branch) + " at " + tuple_str(n, k, l, q));
    }
}

} // namespace

Count self_orthogonal_count(int n, int k, long q) {
    require_field_order(q);
    if (n < 1 || k < 0 || 2 * k > n)
        throw std::invalid_argument("self_orthogonal_count requires 0 <= k <= n/2, got " +
                                    tuple_str(n, k, 0, q));
    if (k == 0)
        return 1;

    static std::mutex mu;
    static std::map<std::tuple<int, int, long>, Count> cache;
    const auto key = std::make_tuple(n, k, q);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    const int m = n / 2;
    Ratio pi(1);
    for (int i = 1; i <= k; ++i)
        pi *= make_ratio(pw(q, 2 * m - 2 * i + 2) - 1, pw(q, i) - 1);

    Ratio result;
    const char* branch;
    if (n % 2 == 1) {
        result = pi;
        branch = "sigma: n odd";
    } else if (q % 2 == 0) {
        result = pi * make_ratio(pw(q, n - k) - 1, pw(q, n) - 1);
        branch = "sigma: n and q even";
    } else if (n % 4 == 2 && q % 4 == 3) {
        result = pi * make_ratio(pw(q, m - k) - 1, pw(q, m) - 1);
        branch = "sigma: n = 2 mod 4, q = 3 mod 4";
    } else {
        result = pi * make_ratio(pw(q, m - k) + 1, pw(q, m) + 1);
        branch = "sigma: n = 0 mod 4, or n = 2 mod 4 and q = 1 mod 4";
    }

    Count value = to_count(result, branch, n, k, 0, q);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

Count sendrier_count(int n, int k, int l, long q) {
    require_field_order(q);
    if (n < 1 || k < 0 || k > n || l < 0)
        throw std::invalid_argument("bad parameters " + tuple_str(n, k, l, q));
    const int keff = std::min(k, n - k); // A_{n,k,l} = A_{n,n-k,l}
    if (l > keff)
        return 0;
    if (keff == 0)
        return l == 0 ? 1 : 0;

    Count total = 0;
    for (int i = l; i <= keff; ++i) {
        Count term = gaussian_binomial(n - 2 * i, keff - i, q) * gaussian_binomial(i, l, q) *
                     pw(q, choose2(i - l)) * self_orthogonal_count(n, i, q);
        if ((i - l) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    if (total < 0)
        throw std::logic_error("negative count from alternating sum at " + tuple_str(n, k, l, q));
    return total;
}

Count product_count_even_q(int n, int k, int l, long q) {
    require_field_order(q);
    if (q % 2 != 0)
        throw std::invalid_argument("product_count_even_q requires even q");
    if (n < 1 || k < 0 || k > n || l < 0)
        throw std::invalid_argument("bad parameters " + tuple_str(n, k, l, q));
    if (l > std::min(k, n - k))
        return 0;
    if (k == 0)
        return 1; // l == 0 here
    if (2 * l == n && 2 * k == n)
        return self_orthogonal_count(n, k, q); // self-dual corner
    if (k == n - l)
        return product_count_even_q(n, n - k, l, q); // unified form degenerates here

    const int k0 = k - l;
    const long q2 = q * q;
    // The two same-parity branches (n == k0 mod 2) share the product with
    // numerator q^{n-k0-i} - q^i and carry a trailing correction factor; the
    // mixed-parity branches use numerator q^{n-k0-i} - q^{i-1} and none.
    const bool same_parity = (n % 2) == (k0 % 2);
    Ratio result(1);
    for (int i = 1; i <= l; ++i) {
        Count numer = pw(q, n - k0 - i) - pw(q, same_parity ? i : i - 1);
        result *= make_ratio(numer, (pw(q, i) - 1) * pw(q, k0 + i - 1));
    }
    const char* branch;
    if (n % 2 == 0 && k0 % 2 == 1) {
        result *= pw(q, (static_cast<long>(n) * k0 - static_cast<long>(k0) * k0 + n - 1) / 2);
        result *= gaussian_binomial(n / 2 - 1, (k0 - 1) / 2, q2);
        branch = "even q: n even, k0 odd";
    } else if (n % 2 == 1 && k0 % 2 == 1) {
        result *= make_ratio(pw(q, n - k0) - 1, pw(q, l) * (pw(q, n - k - l) - 1));
        result *= pw(q, (static_cast<long>(n) - k0) * (k0 - 1) / 2 + n - k);
        result *= gaussian_binomial((n - 1) / 2, (k0 - 1) / 2, q2);
        branch = "even q: n odd, k0 odd";
    } else if (n % 2 == 1 && k0 % 2 == 0) {
        result *= pw(q, static_cast<long>(k0) * (n - k0 + 1) / 2);
        result *= gaussian_binomial((n - 1) / 2, k0 / 2, q2);
        branch = "even q: n odd, k0 even";
    } else {
        result *= make_ratio(pw(q, n - l) - 1, pw(q, l) * (pw(q, n - k - l) - 1));
        result *= pw(q, static_cast<long>(k0) * (n - k0) / 2);
        result *= gaussian_binomial(n / 2 - 1, k0 / 2, q2);
        branch = "even q: n even, k0 even";
    }
    return to_count(result, branch, n, k, l, q);
}

Count product_count_odd_q(int n, int k, int l, long q) {
    require_field_order(q);
    if (q % 2 != 1)
        throw std::invalid_argument("product_count_odd_q requires odd q");
    if (n < 1 || k < 0 || k > n || l < 0)
        throw std::invalid_argument("bad parameters " + tuple_str(n, k, l, q));
    if (l > std::min(k, n - k))
        return 0;
    if (k == 0)
        return 1;

    const int k0 = k - l;
    const long q2 = q * q;
    Ratio result(1);
    const char* branch;
    if (k0 % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 1; i <= l; ++i)
                result *= make_ratio(pw(q, n - k0 - 2 * i + 1) - 1, pw(q, k0) * (pw(q, i) - 1));
            result *= pw(q, (static_cast<long>(k0) * (n - k0) - 1) / 2);
            result *= pw(q, n / 2) - eta_of_minus_one_power(n, q); // B1
            result *= gaussian_binomial(n / 2 - 1, (k0 - 1) / 2, q2);
            branch = "odd q: n even, k0 odd";
        } else {
            for (int i = 1; i <= l; ++i)
                result *= make_ratio(pw(q, n - k0 - 2 * i + 2) - 1, pw(q, k0) * (pw(q, i) - 1));
            result *= pw(q, (static_cast<long>(n) - k0) * (k0 + 1) / 2 - l);
            result *= gaussian_binomial((n - 1) / 2, (k0 - 1) / 2, q2);
            branch = "odd q: n odd, k0 odd";
        }
    } else {
        if (n % 2 == 1) {
            for (int i = 1; i <= l; ++i)
                result *= make_ratio(pw(q, n - k0 - 2 * i + 1) - 1, pw(q, k0) * (pw(q, i) - 1));
            result *= pw(q, static_cast<long>(k0) * (n - k0 + 1) / 2);
            result *= gaussian_binomial((n - 1) / 2, k0 / 2, q2);
            branch = "odd q: n odd, k0 even";
        } else {
            for (int i = 1; i <= l; ++i)
                result *= make_ratio(pw(q, n - k0 - 2 * i + 2) - 1, pw(q, k0) * (pw(q, i) - 1));
            result *= pw(q, static_cast<long>(k0) * (n - k0) / 2);
            const int eta = eta_of_minus_one_power(n, q);
            result *= make_ratio(pw(q, n / 2 - l) + eta, pw(q, n / 2) + eta); // B2
            result *= gaussian_binomial(n / 2, k0 / 2, q2);
            branch = "odd q: n even, k0 even";
        }
    }
    return to_count(result, branch, n, k, l, q);
}

Count product_count(int n, int k, int l, long q) {
    return q % 2 == 0 ? product_count_even_q(n, k, l, q) : product_count_odd_q(n, k, l, q);
}

Count lcd_count_closed(int n, int k, long q) {
    require_field_order(q);
    if (q % 2 != 1)
        throw std::invalid_argument("lcd_count_closed requires odd q");
    if (k <= 0 || k >= n)
        throw std::invalid_argument("lcd_count_closed requires 0 < k < n");
    const long q2 = q * q;
    Ratio result(1);
    const char* branch;
    if (k % 2 == 1) {
        if (n % 2 == 0) {
            result *= pw(q, (static_cast<long>(k) * (n - k) - 1) / 2);
            result *= pw(q, n / 2) - eta_of_minus_one_power(n, q);
            result *= gaussian_binomial(n / 2 - 1, (k - 1) / 2, q2);
            branch = "lcd closed form: n even, k odd";
        } else {
            result *= pw(q, (static_cast<long>(k) + 1) * (n - k) / 2);
            result *= gaussian_binomial((n - 1) / 2, (k - 1) / 2, q2);
            branch = "lcd closed form: n odd, k odd";
        }
    } else {
        if (n % 2 == 1) {
            result *= pw(q, static_cast<long>(k) * (n - k + 1) / 2);
            result *= gaussian_binomial((n - 1) / 2, k / 2, q2);
            branch = "lcd closed form: n odd, k even";
        } else {
            result *= pw(q, static_cast<long>(k) * (n - k) / 2);
            result *= gaussian_binomial(n / 2, k / 2, q2);
            branch = "lcd closed form: n even, k even";
        }
    }
    return to_count(result, branch, n, k, 0, q);
}

const char* to_string(SpectrumMethod m) {
    switch (m) {
    case SpectrumMethod::sendrier: return "sendrier";
    case SpectrumMethod::product_even: return "product_even";
    case SpectrumMethod::product_odd: return "product_odd";
    case SpectrumMethod::lcd_closed: return "lcd_closed";
    case SpectrumMethod::brute_force: return "brute_force";
    }
    return "?";
}

HullSpectrum spectrum(int n, int k, long q, SpectrumMethod method) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("spectrum requires 1 <= k <= n-1");
    if (method == SpectrumMethod::product_even && q % 2 != 0)
        throw std::invalid_argument("product_even requires even q");
    if (method == SpectrumMethod::product_odd && q % 2 != 1)
        throw std::invalid_argument("product_odd requires odd q");
    if (method == SpectrumMethod::brute_force || method == SpectrumMethod::lcd_closed)
        throw std::invalid_argument("spectrum formula backend expected");

    HullSpectrum s;
    s.q = q;
    s.n = n;
    s.k = k;
    s.method = method;
    s.counts.reserve(static_cast<size_t>(k) + 1);
    Count sum = 0;
    for (int l = 0; l <= k; ++l) {
        Count v = method == SpectrumMethod::sendrier ? sendrier_count(n, k, l, q)
                                                     : product_count(n, k, l, q);
        sum += v;
        s.counts.push_back(std::move(v));
    }
    if (sum != gaussian_binomial(n, k, q))
        throw std::logic_error("spectrum does not partition the Grassmannian at " +
                               tuple_str(n, k, -1, q));
    return s;
}

ConditionStar condition_star(int n, long q) {
    require_field_order(q);
    ConditionStar cs;
    cs.q = q;
    cs.n = n;
    if (q % 2 == 0) {
        cs.holds = false;
        return cs;
    }
    const Field& f = field_for_order(static_cast<int>(q));
    cs.holds = (n % 4 == 2) && f.eta(f.neg(f.one())) == -1;
    return cs;
}

} // namespace hullcensus
