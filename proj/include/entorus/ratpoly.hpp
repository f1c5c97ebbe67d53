#ifndef ENTORUS_RATPOLY_HPP
#define ENTORUS_RATPOLY_HPP

#include <string>

#include "entorus/intpoly.hpp"

namespace entorus {

// Polynomial over Q stored as an integer polynomial with one positive common
// denominator, kept in lowest terms (gcd(content(num), den) = 1).
class RatPoly {
  public:
    RatPoly() : den_(1) {}
    RatPoly(IntPoly num, Integer den);
    explicit RatPoly(const IntPoly& num) : num_(num), den_(1) {}

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly(IntPoly::constant(1)); }
    static RatPoly constant(const Integer& p, const Integer& q) { return RatPoly(IntPoly::constant(p), q); }

    const IntPoly& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    int degree() const { return num_.degree(); }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scale(const Integer& p, const Integer& q) const;  // multiply by p/q
    bool operator==(const RatPoly& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    // Long division over Q by any nonzero divisor.
    void divmod(const RatPoly& divisor, RatPoly& quot, RatPoly& rem) const;
    RatPoly mod(const RatPoly& divisor) const;

    std::string to_string(const std::string& var = "X") const;

  private:
    void canonicalize();
    IntPoly num_;
    Integer den_;
};

// Inverse of a modulo m over Q[X]: returns g with a*g = 1 (mod m),
// deg g < deg m.  Throws InvalidArgument if gcd(a, m) != 1.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

}  // namespace entorus

#endif
