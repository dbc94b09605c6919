#include "hullcensus/ratio.hpp"

#include "hullcensus/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace hullcensus {

namespace {

std::string tuple_str(int n, int k, int l, long q) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
           ", q=" + std::to_string(q) + ")";
}

int eta_of_minus_one_power(int n, long q) {
    const Field& f = field_for_order(static_cast<int>(q));
    Field::Elem value = (n / 2) % 2 == 0 ? f.one() : f.neg(f.one());
    return f.eta(value);
}

// The one parameter family with A_{n,k,l+1,q} = 0: the self-orthogonal
// count vanishes at k = n/2 when q == 3 (mod 4) and n == 2 (mod 4).
bool next_count_vanishes(int n, int k, int l, long q) {
    return q % 2 == 1 && q % 4 == 3 && n % 4 == 2 && l + 1 == k && 2 * k == n;
}

void check_domain(int n, int k, int l, long q) {
    if (q < 2 || n < 2 || k < 1 || 2 * k > n || l < 0 || l > k - 1)
        throw std::invalid_argument("ratio analysis requires 0 <= l <= k-1 <= n/2 - 1, got " +
                                    tuple_str(n, k, l, q));
}

Count pw(long q, long e) {
    return q_power(q, static_cast<unsigned long>(e));
}

} // namespace

AlphaResult alpha(int n, int k, int l, long q) {
    check_domain(n, k, l, q);
    if (next_count_vanishes(n, k, l, q))
        throw DegenerateRatioError(
            "A" + tuple_str(n, k, l + 1, q) +
            " = 0 (the self-orthogonal count vanishes for q = 3 mod 4, n = 2 mod 4, k = n/2); "
            "the consecutive ratio is undefined");

    const int kl = k - l;
    AlphaResult out;
    if (q % 2 == 0) {
        if (n % 2 == 0 && kl % 2 == 1) {
            out.value = make_ratio(pw(q, n - l - 1), pw(q, n - l - 1) - 1);
            out.branch = "even q, n even, k-l odd";
        } else if (n % 2 == 1 && kl % 2 == 1) {
            out.value = make_ratio(pw(q, n - k - l), pw(q, n - k - l) - 1);
            out.branch = "even q, n odd, k-l odd";
        } else if (n % 2 == 1 && kl % 2 == 0) {
            out.value = make_ratio(pw(q, kl), pw(q, kl) - 1);
            out.branch = "even q, n odd, k-l even";
        } else {
            out.value = make_ratio(pw(q, n - l) - 1,
                                   pw(q, l) * (pw(q, n - k - l) - 1) * (pw(q, kl) - 1));
            out.branch = "even q, n even, k-l even";
        }
    } else {
        if (n % 2 == 0 && kl % 2 == 1) {
            const int eta = eta_of_minus_one_power(n, q);
            out.value = make_ratio(pw(q, n / 2 - 1), pw(q, n / 2 - 1) + eta * pw(q, l));
            out.branch = eta > 0 ? "odd q, n even, k-l odd, eta +1" : "odd q, n even, k-l odd, eta -1";
        } else if (n % 2 == 1 && kl % 2 == 1) {
            out.value = make_ratio(pw(q, n - k - l), pw(q, n - k - l) - 1);
            out.branch = "odd q, n odd, k-l odd";
        } else if (n % 2 == 1 && kl % 2 == 0) {
            out.value = make_ratio(pw(q, kl), pw(q, kl) - 1);
            out.branch = "odd q, n odd, k-l even";
        } else {
            const int eta = eta_of_minus_one_power(n, q);
            out.value = make_ratio(pw(q, n / 2 - l) * (pw(q, n / 2 - l) + eta),
                                   (pw(q, n - k - l) - 1) * (pw(q, kl) - 1));
            out.branch = "odd q, n even, k-l even";
        }
    }
    return out;
}

Count mu(int n, int k, int l, long q) {
    check_domain(n, k, l, q);
    Count a_l = product_count(n, k, l, q);
    Count a_next = product_count(n, k, l + 1, q);
    if (a_next == 0)
        throw DegenerateRatioError("A" + tuple_str(n, k, l + 1, q) + " = 0; mu is undefined");
    return a_l / a_next; // both nonnegative, floor division
}

MuPrediction predicted_mu(int n, int k, int l, long q) {
    check_domain(n, k, l, q);
    MuPrediction out;
    const int kl = k - l;
    const Count exact_value = pw(q, l + 1) - 1;

    if (q % 2 == 0) {
        if (n % 2 == 0 && kl % 2 == 1) {
            if (n == 2 * k && l == k - 1) {
                out.kind = MuPrediction::Kind::exact;
                out.value = pw(q, l + 1); // the ratio is exactly q^{l+1} here
            } else {
                out.kind = MuPrediction::Kind::exact;
                out.value = exact_value;
            }
        } else if (n % 2 == 1 && kl % 2 == 1) {
            out.kind = 2 * l < n - k - 1 ? MuPrediction::Kind::exact : MuPrediction::Kind::lower_bound;
            out.value = out.kind == MuPrediction::Kind::exact ? exact_value : pw(q, l + 1);
        } else if (n % 2 == 1 && kl % 2 == 0) {
            out.kind = 2 * l < k - 1 ? MuPrediction::Kind::exact : MuPrediction::Kind::lower_bound;
            out.value = out.kind == MuPrediction::Kind::exact ? exact_value : pw(q, l + 1);
        }
        // n even, k-l even: not covered.
        return out;
    }

    if (n % 2 == 1 && kl % 2 == 0) {
        out.kind = 2 * l < k - 1 ? MuPrediction::Kind::exact : MuPrediction::Kind::lower_bound;
        out.value = out.kind == MuPrediction::Kind::exact ? exact_value : pw(q, l + 1);
    } else if (n % 2 == 1 && kl % 2 == 1) {
        out.kind = 2 * l < n - k - 1 ? MuPrediction::Kind::exact : MuPrediction::Kind::lower_bound;
        out.value = out.kind == MuPrediction::Kind::exact ? exact_value : pw(q, l + 1);
    } else if (n % 2 == 0 && kl % 2 == 1 && eta_of_minus_one_power(n, q) == -1) {
        // alpha = q^m / (q^m - 1) with m = n/2 - l - 1.
        if (next_count_vanishes(n, k, l, q))
            throw DegenerateRatioError("A" + tuple_str(n, k, l + 1, q) + " = 0; mu is undefined");
        if (4 * l < n - 4) {
            out.kind = MuPrediction::Kind::exact;
            out.value = exact_value;
        } else {
            out.kind = MuPrediction::Kind::lower_bound;
            out.value = pw(q, l + 1);
        }
    }
    // Remaining odd-q branches (n even with eta +1 or k-l even): not covered.
    return out;
}

RatioReport ratio_report(int n, int k, int l, long q) {
    check_domain(n, k, l, q);
    RatioReport rep;
    rep.q = q;
    rep.n = n;
    rep.k = k;
    rep.l = l;

    const Count full_bound = pw(q, l + 1) - 1;
    rep.half_bound =
        q % 2 == 1 && n % 2 == 0 && (k - l) % 2 == 1 && eta_of_minus_one_power(n, q) == 1;
    rep.bound = rep.half_bound ? exact_div(full_bound, 2) : full_bound;

    Count a_l = product_count(n, k, l, q);
    Count a_next = product_count(n, k, l + 1, q);
    if (a_next == 0) {
        rep.degenerate = true;
        rep.branch = "degenerate: A_{l+1} = 0 (vanishing self-orthogonal count)";
        rep.ok = a_l > 0; // any positive count clears either bound
        return rep;
    }

    AlphaResult a = alpha(n, k, l, q);
    rep.alpha = a.value;
    rep.branch = a.branch;
    rep.ratio = make_ratio(a_l, a_next);
    rep.mu = a_l / a_next;
    if (rep.half_bound) {
        rep.ok = 2 * a_l >= full_bound * a_next;
        rep.tight = 2 * a_l == full_bound * a_next;
    } else {
        rep.ok = a_l > full_bound * a_next;
        rep.tight = false;
    }
    return rep;
}

VerificationResult verify_ratio_bounds(const VerificationGrid& grid) {
    VerificationResult out;
    std::vector<long> qs = grid.qs;
    std::sort(qs.begin(), qs.end());
    for (long q : qs) {
        for (int n = 2; n <= grid.max_n; ++n)
            for (int k = 1; 2 * k <= n; ++k)
                for (int l = 0; l < k; ++l) {
                    RatioReport rep = ratio_report(n, k, l, q);
                    if (!rep.ok)
                        out.violations.push_back(rep);
                    out.reports.push_back(std::move(rep));
                }
    }
    return out;
}

} // namespace hullcensus
