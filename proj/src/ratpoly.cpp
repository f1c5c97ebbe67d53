#include "entorus/ratpoly.hpp"

#include <sstream>

namespace entorus {

RatPoly::RatPoly(IntPoly num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) raise(Err::InvalidArgument, "RatPoly: zero denominator");
    canonicalize();
}

void RatPoly::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_.content(), den_);
    if (g > 1) {
        std::vector<Integer> c = num_.coeffs();
        for (auto& v : c) v /= g;
        num_ = IntPoly(std::move(c));
        den_ /= g;
    }
}

RatPoly RatPoly::operator-() const { return RatPoly(-num_, den_); }

RatPoly RatPoly::operator+(const RatPoly& o) const {
    return RatPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    return RatPoly(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    return RatPoly(num_ * o.num_, den_ * o.den_);
}

RatPoly RatPoly::scale(const Integer& p, const Integer& q) const {
    if (q == 0) raise(Err::InvalidArgument, "RatPoly::scale by p/0");
    return RatPoly(num_ * p, den_ * q);
}

namespace {

bool monic_integral(const RatPoly& p) {
    return p.is_integral() && !p.is_zero() && p.numerator().lead() == 1;
}

// d^E * u = q * v + r with d = lead(v); classical pseudo-division over Z.
void pseudo_divmod(const IntPoly& u, const IntPoly& v, IntPoly& q, IntPoly& r, Integer& dE) {
    const Integer& d = v.lead();
    int E = std::max(u.degree() - v.degree() + 1, 0);
    r = u;
    q = IntPoly();
    int left = E;
    while (!r.is_zero() && r.degree() >= v.degree()) {
        IntPoly s = IntPoly::monomial(static_cast<u64>(r.degree() - v.degree()), r.lead());
        q = q * d + s;
        r = r * d - s * v;
        --left;
    }
    Integer fix = pow_int(d, static_cast<u64>(left));
    q = q * fix;
    r = r * fix;
    dE = pow_int(d, static_cast<u64>(E));
}

}  // namespace

void RatPoly::divmod(const RatPoly& divisor, RatPoly& quot, RatPoly& rem) const {
    if (divisor.is_zero()) raise(Err::InvalidArgument, "RatPoly::divmod by zero");
    if (monic_integral(divisor)) {
        IntPoly q, r;
        num_.divmod_monic(divisor.num_, q, r);
        quot = RatPoly(std::move(q), den_);
        rem = RatPoly(std::move(r), den_);
        return;
    }
    IntPoly q, r;
    Integer dE;
    pseudo_divmod(num_, divisor.num_, q, r, dE);
    // u/du = (q/(dE*du)) * (v/dv) * dv + r/(dE*du)
    quot = RatPoly(std::move(q), dE * den_) * RatPoly(IntPoly::constant(divisor.den_), 1);
    rem = RatPoly(std::move(r), dE * den_);
}

RatPoly RatPoly::mod(const RatPoly& divisor) const {
    RatPoly q, r;
    divmod(divisor, q, r);
    return r;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (den_ == 1) return num_.to_string(var);
    std::ostringstream os;
    os << "(" << num_.to_string(var) << ")/" << den_.str();
    return os.str();
}

namespace {

// Plain extended Euclid; intended for small moduli (remainder chain degrees
// stay below deg m).
RatPoly inverse_mod_euclid(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = m, r1 = a.mod(m);
    RatPoly t0 = RatPoly::zero(), t1 = RatPoly::one();
    while (!r1.is_zero() && r1.degree() > 0) {
        RatPoly q, r;
        r0.divmod(r1, q, r);
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r1.is_zero()) raise(Err::InvalidArgument, "inverse_mod: not coprime");
    // r1 is a nonzero constant c; a * (t1/c) = 1 (mod m)
    const Integer c_num = r1.numerator().coeff(0);
    const Integer c_den = r1.denominator();
    return (t1.scale(c_den, c_num)).mod(m);
}

}  // namespace

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
    if (m.degree() < 1) raise(Err::InvalidArgument, "inverse_mod: modulus must have degree >= 1");
    RatPoly ar = a.mod(m);
    if (ar.is_zero()) raise(Err::InvalidArgument, "inverse_mod: not coprime");
    if (ar.degree() == 0) {
        return RatPoly::constant(ar.denominator(), ar.numerator().coeff(0));
    }
    if (m.degree() <= 64) return inverse_mod_euclid(ar, m);

    // Large modulus: our callers always pass a monic integral a (cyclotomic
    // products), so lift the small inverse v = m^{-1} mod a through
    // u = (1 - m*v)/a, which keeps every division monic-exact.
    if (!monic_integral(a) || !monic_integral(m))
        raise(Err::InvalidArgument, "inverse_mod: large modulus requires monic integral operands");
    IntPoly mq, mr;
    m.numerator().divmod_monic(a.numerator(), mq, mr);
    RatPoly v = inverse_mod(RatPoly(mr), a);  // modulus a is small(er)
    RatPoly w = RatPoly::one() - RatPoly(m.numerator()) * v;
    IntPoly uq, ur;
    w.numerator().divmod_monic(a.numerator(), uq, ur);
    if (!ur.is_zero()) raise(Err::Internal, "inverse_mod: lift division not exact");
    return RatPoly(std::move(uq), w.denominator());
}

}  // namespace entorus
