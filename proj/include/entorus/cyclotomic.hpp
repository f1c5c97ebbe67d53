#ifndef ENTORUS_CYCLOTOMIC_HPP
#define ENTORUS_CYCLOTOMIC_HPP

#include <map>

#include "entorus/digits.hpp"
#include "entorus/ratpoly.hpp"

namespace entorus {

// n-th cyclotomic polynomial, monic of degree phi(n).  Computed by exact
// division of X^n - 1 by the lower-index factors; memoized, safe for
// concurrent readers.
IntPoly cyclotomic(u64 n);

Integer cyclotomic_eval(u64 n, const Integer& q);

// Res(Phi_f, Phi_e) for 1 <= e < f, by Sylvester-matrix determinant
// (fraction-free elimination).
Integer cyclotomic_resultant(u64 e, u64 f);

// The same resultant from the prime-power closed form; the dual route used
// to cross-check cyclotomic_resultant.
Integer cyclotomic_resultant_closed_form(u64 e, u64 f);

// Phi_f^{-1} mod Phi_e over Q[X], degree < phi(e); requires e != f.
RatPoly cyclotomic_inverse_mod(u64 f, u64 e);

// Bezout family W_{d,e} for squarefree d: sum over e|d of
// ((X^d-1)/Phi_e) * W_{d,e} = 1, with den(W_{d,e}) | d.
std::map<u64, RatPoly> bezout_polynomials(u64 d);

// Left-hand side of the Bezout identity, for verification.
RatPoly bezout_identity_sum(u64 d, const std::map<u64, RatPoly>& w);

// Chinese-remainder combination: the unique polynomial of degree
// < deg(m1*m2) congruent to a mod m1 and b mod m2 (m1, m2 coprime).
RatPoly crt_combine(const RatPoly& a, const RatPoly& m1, const RatPoly& b, const RatPoly& m2);

// Digit exponents driving the two-step reconstruction for n = p*r:
// u_* are the pairwise cyclotomic inverses, v_* the CRT-combined inverses
// modulo the products, nv_* the integer-digit scaled forms.
struct PrExponents {
    DigitExponent u_1, u_p, u_r, u_pr;
    DigitExponent v_1, v_2;
    DigitExponent nv_1, nv_2;
};

PrExponents reconstruction_exponents(u64 p, u64 r);

}  // namespace entorus

#endif
