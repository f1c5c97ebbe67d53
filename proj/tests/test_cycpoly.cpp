#include <doctest.h>

#include "entorus/cyclotomic.hpp"

using namespace entorus;

namespace {

IntPoly phi(u64 n) { return cyclotomic(n); }

RatPoly rat(std::initializer_list<long long> coeffs, long long den = 1) {
    return RatPoly(IntPoly(coeffs), Integer(den));
}

}  // namespace

TEST_CASE("cyclotomic polynomials: pinned values") {
    CHECK(phi(1) == IntPoly{-1, 1});
    CHECK(phi(2) == IntPoly{1, 1});
    CHECK(phi(6) == IntPoly{1, -1, 1});
    CHECK(phi(15) == IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1});
    CHECK(phi(15).degree() == 8);
    CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("cyclotomic degree and product identity up to 100") {
    for (u64 n = 1; n <= 100; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (u64 d : divisors_u64(n)) {
            IntPoly pd = phi(d);
            CHECK(pd.degree() == static_cast<int>(totient_u64(d)));
            CHECK(pd.lead() == 1);
            prod = prod * pd;
        }
        CHECK(prod == IntPoly::x_power_minus_one(n));
    }
}

TEST_CASE("cyclotomic resultants: pinned values") {
    CHECK(cyclotomic_resultant(1, 5) == 5);
    CHECK(cyclotomic_resultant(3, 15) == 25);
    CHECK(cyclotomic_resultant(3, 5) == 1);
    CHECK(cyclotomic_resultant(1, 2) == -2);
    CHECK_THROWS_AS(cyclotomic_resultant(5, 5), Error);
    CHECK_THROWS_AS(cyclotomic_resultant(0, 3), Error);
}

TEST_CASE("resultant direct route equals closed form, 1 <= e < f <= 30") {
    for (u64 f = 2; f <= 30; ++f)
        for (u64 e = 1; e < f; ++e) {
            CAPTURE(e);
            CAPTURE(f);
            CHECK(cyclotomic_resultant(e, f) == cyclotomic_resultant_closed_form(e, f));
        }
}

TEST_CASE("resultant prime-power family") {
    // Res(Phi_1, Phi_p) = p and Res(Phi_e, Phi_pe) = p^phi(e)
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (p > 2) CHECK(cyclotomic_resultant(1, p) == p);
        for (u64 e : {2ull, 3ull, 4ull, 6ull, 9ull}) {
            if (e * p > 40) continue;
            CHECK(cyclotomic_resultant(e, e * p) == pow_int(Integer(p), totient_u64(e)));
        }
    }
}

TEST_CASE("cyclotomic_inverse_mod: pinned values") {
    CHECK(cyclotomic_inverse_mod(5, 1) == rat({1}, 5));
    CHECK(cyclotomic_inverse_mod(1, 3) == rat({-2, -1}, 3));
    CHECK(cyclotomic_inverse_mod(15, 1) == rat({1}));
}

TEST_CASE("cyclotomic_inverse_mod is exact for all distinct e, f <= 30") {
    for (u64 e = 1; e <= 30; ++e) {
        RatPoly me(phi(e));
        for (u64 f = 1; f <= 30; ++f) {
            if (e == f) continue;
            RatPoly g = cyclotomic_inverse_mod(f, e);
            CHECK(g.degree() < static_cast<int>(totient_u64(e)));
            CHECK((g * RatPoly(phi(f))).mod(me) == RatPoly::one());
        }
    }
}

TEST_CASE("bezout_polynomials: trivial and golden families") {
    auto w1 = bezout_polynomials(1);
    CHECK(w1.size() == 1);
    CHECK(w1.at(1) == RatPoly::one());

    // n = 15 family, scaled to integer digits by 15
    auto w15 = bezout_polynomials(15);
    CHECK(w15.at(1).scale(15, 1) == rat({1}));
    CHECK(w15.at(3).scale(15, 1) == rat({-2, -1}));
    CHECK(w15.at(5).scale(15, 1) == rat({-4, -3, -2, -1}));
    CHECK(w15.at(15).scale(15, 1) == rat({-8, 7, 0, -5, 4, -3, 0, 1}));

    CHECK_THROWS_AS(bezout_polynomials(12), Error);
    try {
        bezout_polynomials(12);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotSquarefree);
    }
}

TEST_CASE("bezout identity holds exactly and denominators divide d, squarefree d <= 105") {
    for (u64 d = 1; d <= 105; ++d) {
        if (!is_squarefree_u64(d) || d % 2 == 0) continue;
        auto w = bezout_polynomials(d);
        CHECK(bezout_identity_sum(d, w) == RatPoly::one());
        for (auto& [e, we] : w) {
            CAPTURE(d);
            CAPTURE(e);
            CHECK(Integer(d) % we.denominator() == 0);
            CHECK(we.degree() < static_cast<int>(totient_u64(e)));
        }
    }
    // a couple of even squarefree d as well; the family is defined for them
    for (u64 d : {6ull, 10ull, 35ull}) {
        auto w = bezout_polynomials(d);
        CHECK(bezout_identity_sum(d, w) == RatPoly::one());
    }
}

TEST_CASE("inverse coefficient shapes for twin cyclotomic pairs (small primes)") {
    // unit-test slice; the acceptance suite runs the full p, r <= 50 matrix
    std::vector<u64> ps{3, 5, 7, 11, 13};
    for (u64 p : ps)
        for (u64 r : ps) {
            if (p == r) continue;
            // inverse against Phi_1 in both directions
            CHECK(cyclotomic_inverse_mod(p, 1) == rat({1}, static_cast<long long>(p)));
            CHECK(cyclotomic_inverse_mod(p * r, 1) == rat({1}));
            // digits of Phi_p^{-1} mod Phi_r all in {-1, 0, 1}
            RatPoly g = cyclotomic_inverse_mod(p, r);
            CHECK(g.is_integral());
            for (const auto& c : g.numerator().coeffs()) CHECK(abs(c) <= 1);
        }
}

TEST_CASE("reconstruction_exponents for (3, 5)") {
    auto ex = reconstruction_exponents(3, 5);
    REQUIRE(ex.u_1.digits.size() == 1);
    CHECK(ex.u_1.digits[0] == 1);
    CHECK(ex.u_1.den == 1);
    for (const auto& d : ex.u_p.digits) CHECK(abs(d) <= 1);
    for (const auto& d : ex.u_pr.digits) CHECK(abs(d) <= 1);

    // integer Bezout check at q = 29:
    // Phi_15(q)*u_1 + Phi_1(q)*u_pr = 1 exactly
    Integer q = 29;
    Integer lhs = cyclotomic_eval(15, q) * ex.u_1.value(q) + cyclotomic_eval(1, q) * ex.u_pr.value(q);
    CHECK(lhs == 1);
    Integer modulus = cyclotomic_eval(1, q) * cyclotomic_eval(15, q);
    CHECK(lhs % modulus == 1 % modulus);

    // Phi_r(q)*u_p + Phi_p(q)*u_r = 1
    CHECK(cyclotomic_eval(5, q) * ex.u_p.value(q) + cyclotomic_eval(3, q) * ex.u_r.value(q) == 1);

    // final recombination: Phi_p(q)Phi_r(q)*v_1 + Phi_1(q)Phi_pr(q)*v_2 = 1,
    // checked on the n-scaled integer forms
    Integer n = 15;
    Integer lhs2 = cyclotomic_eval(3, q) * cyclotomic_eval(5, q) * ex.nv_1.value(q) +
                   cyclotomic_eval(1, q) * cyclotomic_eval(15, q) * ex.nv_2.value(q);
    CHECK(lhs2 == n);

    // CRT assembly agrees with the direct modular inverse
    RatPoly prod = RatPoly(cyclotomic(3)) * RatPoly(cyclotomic(5));
    RatPoly big = RatPoly(cyclotomic(1)) * RatPoly(cyclotomic(15));
    RatPoly direct = inverse_mod(prod, big);
    CHECK(DigitExponent(direct).digits == ex.v_1.digits);
    CHECK(direct.denominator() == ex.v_1.den);
}

TEST_CASE("reconstruction_exponents rejects bad input") {
    CHECK_THROWS_AS(reconstruction_exponents(3, 3), Error);
    CHECK_THROWS_AS(reconstruction_exponents(4, 5), Error);
}
