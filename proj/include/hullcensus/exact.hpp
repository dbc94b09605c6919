#ifndef HULLCENSUS_EXACT_HPP
#define HULLCENSUS_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hullcensus {

// All counts are exact arbitrary-precision integers; every closed-form
// evaluation goes through Ratio and is converted back with an integrality
// assertion, so a mis-transcribed formula fails loudly instead of rounding.
using Count = mpz_class;
using Ratio = mpq_class;

/// Thrown when an exact division has a remainder. Carries both operands.
class IntegralityError : public std::runtime_error {
  public:
    IntegralityError(const Count& dividend, const Count& divisor, const std::string& context = {})
        : std::runtime_error("inexact division: " + dividend.get_str() + " / " + divisor.get_str() +
                             (context.empty() ? "" : " [" + context + "]")),
          dividend_(dividend), divisor_(divisor) {}

    const Count& dividend() const { return dividend_; }
    const Count& divisor() const { return divisor_; }

  private:
    Count dividend_;
    Count divisor_;
};

/// q^e as an exact integer. Requires e >= 0.
Count q_power(const Count& q, unsigned long e);
Count q_power(long q, unsigned long e);

/// a / b, throwing IntegralityError unless b divides a exactly.
Count exact_div(const Count& a, const Count& b);

/// Reduced fraction with positive denominator.
Ratio make_ratio(const Count& num, const Count& den);

/// floor(r) for r >= 0.
Count ratio_floor(const Ratio& r);

/// True iff r is an integer.
bool ratio_is_integer(const Ratio& r);

/// Converts an exact rational known to be integral; IntegralityError otherwise.
Count ratio_to_count(const Ratio& r);

/// Lossless decimal encoding used by every output format.
std::string decimal_string(const Count& v);

/// Display-only rendering of a nonnegative rational, rounded (half up) to
/// `sig_digits` significant digits, trailing zeros stripped ("2.025", "40").
std::string ratio_display(const Ratio& r, int sig_digits = 6);

/// binom(m, 2) = m(m-1)/2 for m >= 0.
long choose2(long m);

} // namespace hullcensus

#endif // HULLCENSUS_EXACT_HPP
