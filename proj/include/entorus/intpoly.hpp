#ifndef ENTORUS_INTPOLY_HPP
#define ENTORUS_INTPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "entorus/integer.hpp"

namespace entorus {

// Dense univariate polynomial over Z.  coeff(i) multiplies X^i; the leading
// stored coefficient is nonzero unless the polynomial is zero (empty vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Integer v);
    static IntPoly monomial(u64 degree, Integer lead = 1);
    static IntPoly x_power_minus_one(u64 n);  // X^n - 1

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& lead() const;
    Integer coeff(size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // Division by a monic divisor; exact over Z.  Sets quotient/remainder.
    void divmod_monic(const IntPoly& divisor, IntPoly& quot, IntPoly& rem) const;

    Integer content() const;  // gcd of coefficients, 0 for the zero polynomial
    Integer eval(const Integer& x) const;
    std::string to_string(const std::string& var = "X") const;

  private:
    void trim();
    std::vector<Integer> c_;
};

}  // namespace entorus

#endif
