#include "hullcensus/exact.hpp"

#include <cassert>

namespace hullcensus {

Count q_power(const Count& q, unsigned long e) {
    Count r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

Count q_power(long q, unsigned long e) {
    return q_power(Count(q), e);
}

Count exact_div(const Count& a, const Count& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw IntegralityError(a, b);
    Count r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Ratio make_ratio(const Count& num, const Count& den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Ratio r(num, den);
    r.canonicalize();
    return r;
}

Count ratio_floor(const Ratio& r) {
    Count q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

bool ratio_is_integer(const Ratio& r) {
    return r.get_den() == 1;
}

Count ratio_to_count(const Ratio& r) {
    if (!ratio_is_integer(r))
        throw IntegralityError(Count(r.get_num()), Count(r.get_den()));
    return Count(r.get_num());
}

std::string decimal_string(const Count& v) {
    return v.get_str();
}

long choose2(long m) {
    assert(m >= 0);
    return m * (m - 1) / 2;
}

namespace {

// Round num/den to the nearest integer, ties away from zero (the
// convention the source tables were printed with).
Count round_half_up(const Count& num, const Count& den) {
    Count q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem * 2 >= den)
        q += 1;
    return q;
}

int digit_count(const Count& v) {
    if (v == 0)
        return 1;
    // mpz sizeinbase may overestimate by 1 for base 10.
    int d = static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 10));
    if (d > 1 && v < q_power(10, static_cast<unsigned long>(d - 1)))
        --d;
    return d;
}

} // namespace

std::string ratio_display(const Ratio& r, int sig_digits) {
    if (r < 0)
        throw std::domain_error("ratio_display expects a nonnegative value");
    if (sig_digits < 1)
        sig_digits = 1;
    const Count num(r.get_num());
    const Count den(r.get_den());
    if (num == 0)
        return "0";

    Count ipart = num / den;
    if (ipart > 0) {
        int point = digit_count(ipart); // digits before the decimal point
        int scale = sig_digits - point;
        if (scale < 0) {
            // Integer magnitude exceeds the significand: round to a
            // multiple of 10^(point - sig_digits).
            Count unit = q_power(10, static_cast<unsigned long>(-scale));
            Count rounded = round_half_up(num, den * unit);
            Count value = rounded * unit;
            return value.get_str();
        }
        Count rounded = round_half_up(num * q_power(10, static_cast<unsigned long>(scale)), den);
        std::string digits = rounded.get_str();
        // Rounding may add a digit (e.g. 999.9995 -> 1000000).
        if (static_cast<int>(digits.size()) > sig_digits) {
            digits.pop_back();
            ++point;
        }
        std::string out = digits.substr(0, static_cast<size_t>(point));
        std::string frac = digits.substr(static_cast<size_t>(point));
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        if (!frac.empty())
            out += "." + frac;
        return out;
    }

    // 0 < r < 1: find the number of leading zeros after the point.
    int zeros = 0;
    Count probe = num * 10;
    while (probe < den) {
        probe *= 10;
        ++zeros;
    }
    Count rounded = round_half_up(num * q_power(10, static_cast<unsigned long>(zeros + sig_digits)), den);
    std::string digits = rounded.get_str();
    if (static_cast<int>(digits.size()) > sig_digits && zeros > 0) {
        // Rounded up across a zero boundary (e.g. 0.0999995 -> 0.1).
        --zeros;
    }
    std::string frac(static_cast<size_t>(zeros), '0');
    frac += digits;
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    return frac.empty() ? "0" : "0." + frac;
}

} // namespace hullcensus
