#ifndef ENTORUS_DIGITS_HPP
#define ENTORUS_DIGITS_HPP

#include <vector>

#include "entorus/ratpoly.hpp"

namespace entorus {

// An exponent written as (sum_i digits[i] * q^i) / den.  The digits are the
// coefficients of a polynomial in q, so Frobenius supplies the q^i part and
// only the small digit values are ever raised by multiplication.
struct DigitExponent {
    std::vector<Integer> digits;
    Integer den = 1;

    DigitExponent() = default;
    explicit DigitExponent(const IntPoly& p) : digits(p.coeffs()) {}
    explicit DigitExponent(const RatPoly& p) : digits(p.numerator().coeffs()), den(p.denominator()) {}

    bool is_integral() const { return den == 1; }

    Integer numerator_value(const Integer& q) const {
        Integer r = 0;
        for (size_t i = digits.size(); i-- > 0;) r = r * q + digits[i];
        return r;
    }

    // The represented integer; den must divide the numerator evaluation.
    Integer value(const Integer& q) const {
        Integer num = numerator_value(q);
        if (num % den != 0)
            raise(Err::InvalidArgument, "DigitExponent: denominator does not divide evaluation");
        return num / den;
    }

    Integer max_abs_digit() const {
        Integer m = 0;
        for (const auto& d : digits) {
            Integer a = d < 0 ? Integer(-d) : d;
            if (a > m) m = a;
        }
        return m;
    }

    // Exponent scaled by k (used for the integer-digit n*W variants).
    DigitExponent times(const Integer& k) const {
        RatPoly p(IntPoly(std::vector<Integer>(digits)), den);
        return DigitExponent(p.scale(k, 1));
    }
};

}  // namespace entorus

#endif
