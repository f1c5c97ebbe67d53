#include "entorus/intpoly.hpp"

#include <sstream>

namespace entorus {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.push_back(Integer(v));
    trim();
}

IntPoly IntPoly::constant(Integer v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(u64 degree, Integer lead) {
    IntPoly p;
    if (lead != 0) {
        p.c_.assign(degree + 1, Integer(0));
        p.c_[degree] = std::move(lead);
    }
    return p;
}

IntPoly IntPoly::x_power_minus_one(u64 n) {
    IntPoly p;
    p.c_.assign(n + 1, Integer(0));
    p.c_[0] = -1;
    p.c_[n] = 1;
    return p;
}

const Integer& IntPoly::lead() const {
    if (c_.empty()) raise(Err::InvalidArgument, "lead() of zero polynomial");
    return c_.back();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const Integer& k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

void IntPoly::divmod_monic(const IntPoly& divisor, IntPoly& quot, IntPoly& rem) const {
    if (divisor.is_zero() || divisor.lead() != 1)
        raise(Err::InvalidArgument, "divmod_monic: divisor must be monic");
    rem = *this;
    quot = IntPoly();
    int dd = divisor.degree();
    if (rem.degree() < dd) return;
    quot.c_.assign(rem.degree() - dd + 1, Integer(0));
    for (int i = rem.degree(); i >= dd; --i) {
        Integer f = rem.coeff(i);
        if (f == 0) continue;
        quot.c_[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem.c_[i - dd + j] -= f * divisor.c_[j];
    }
    quot.trim();
    rem.trim();
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    if (g < 0) g = -g;
    return g;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Integer& v = c_[i];
        if (v == 0) continue;
        Integer a = v < 0 ? Integer(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace entorus
