#include "entorus/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <vector>

namespace entorus {

namespace {

std::shared_mutex cyc_mutex;
std::map<u64, IntPoly> cyc_cache;

}  // namespace

IntPoly cyclotomic(u64 n) {
    if (n < 1) raise(Err::InvalidArgument, "cyclotomic: n must be >= 1");
    {
        std::shared_lock lock(cyc_mutex);
        auto it = cyc_cache.find(n);
        if (it != cyc_cache.end()) return it->second;
    }
    IntPoly result;
    if (n == 1) {
        result = IntPoly{-1, 1};
    } else {
        IntPoly prod = IntPoly::constant(1);
        for (u64 d : divisors_u64(n))
            if (d < n) prod = prod * cyclotomic(d);
        IntPoly quot, rem;
        IntPoly::x_power_minus_one(n).divmod_monic(prod, quot, rem);
        if (!rem.is_zero()) raise(Err::Internal, "cyclotomic: division not exact");
        result = quot;
    }
    std::unique_lock lock(cyc_mutex);
    cyc_cache.emplace(n, result);
    return result;
}

Integer cyclotomic_eval(u64 n, const Integer& q) { return cyclotomic(n).eval(q); }

namespace {

// Fraction-free (Bareiss) determinant; exact over Z.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return 0;
    const size_t n = static_cast<size_t>(da + db);
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j) m[row][row + j] = a.coeff(da - j);
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j) m[db + row][row + j] = b.coeff(db - j);
    return bareiss_det(std::move(m));
}

}  // namespace

Integer cyclotomic_resultant(u64 e, u64 f) {
    if (e < 1 || e >= f) raise(Err::InvalidArgument, "cyclotomic_resultant: need 1 <= e < f");
    return sylvester_resultant(cyclotomic(f), cyclotomic(e));
}

Integer cyclotomic_resultant_closed_form(u64 e, u64 f) {
    if (e < 1 || e >= f) raise(Err::InvalidArgument, "cyclotomic_resultant: need 1 <= e < f");
    // Per-prime exponent bookkeeping; terms with negative Moebius sign cancel
    // inside each prime's total.
    std::map<u64, i64> exponents;
    for (u64 d : divisors_u64(e)) {
        int mu = moebius_u64(e / d);
        if (mu == 0) continue;
        u64 g = f / std::gcd(f, d);
        auto fac = factor_u64(g);
        if (fac.size() != 1) continue;  // not a prime power
        u64 p = fac[0].first;
        u64 phi_pi = totient_u64(g);
        u64 phi_f = totient_u64(f);
        exponents[p] += static_cast<i64>(mu) * static_cast<i64>(phi_f / phi_pi);
    }
    Integer r = 1;
    for (auto& [p, exp] : exponents) {
        if (exp < 0) raise(Err::Internal, "resultant closed form: negative net exponent");
        r *= pow_int(Integer(p), static_cast<u64>(exp));
    }
    // Orientation: Res(Phi_f, Phi_e) is negative exactly for (e, f) = (1, 2),
    // the only pair where both degrees are odd.
    if (e == 1 && f == 2) r = -r;
    return r;
}

RatPoly cyclotomic_inverse_mod(u64 f, u64 e) {
    if (e < 1 || f < 1 || e == f)
        raise(Err::InvalidArgument, "cyclotomic_inverse_mod: need distinct e, f >= 1");
    return inverse_mod(RatPoly(cyclotomic(f)), RatPoly(cyclotomic(e)));
}

std::map<u64, RatPoly> bezout_polynomials(u64 d) {
    if (d < 1) raise(Err::InvalidArgument, "bezout_polynomials: d must be >= 1");
    if (!is_squarefree_u64(d)) raise(Err::NotSquarefree, "bezout_polynomials: d has a square factor", static_cast<long long>(d));
    std::map<u64, RatPoly> w;
    auto divs = divisors_u64(d);
    for (u64 e : divs) {
        if (d == 1) {
            w[e] = RatPoly::one();
            continue;
        }
        RatPoly phi_e(cyclotomic(e));
        RatPoly acc = RatPoly::one();
        for (u64 f : divs) {
            if (f == e) continue;
            acc = (acc * cyclotomic_inverse_mod(f, e)).mod(phi_e);
        }
        w[e] = acc;
    }
    return w;
}

RatPoly bezout_identity_sum(u64 d, const std::map<u64, RatPoly>& w) {
    RatPoly sum = RatPoly::zero();
    IntPoly xd1 = IntPoly::x_power_minus_one(d);
    for (auto& [e, we] : w) {
        IntPoly cof, rem;
        xd1.divmod_monic(cyclotomic(e), cof, rem);
        if (!rem.is_zero()) raise(Err::Internal, "bezout_identity_sum: e does not divide d");
        sum = sum + RatPoly(cof) * we;
    }
    return sum;
}

RatPoly crt_combine(const RatPoly& a, const RatPoly& m1, const RatPoly& b, const RatPoly& m2) {
    RatPoly m1m2 = m1 * m2;
    RatPoly e1 = m2 * inverse_mod(m2, m1);  // 1 mod m1, 0 mod m2
    RatPoly e2 = m1 * inverse_mod(m1, m2);  // 0 mod m1, 1 mod m2
    return (a * e1 + b * e2).mod(m1m2);
}

PrExponents reconstruction_exponents(u64 p, u64 r) {
    if (p == r || !is_prime_u64(p) || !is_prime_u64(r))
        raise(Err::InvalidArgument, "reconstruction_exponents: p, r must be distinct primes");
    const u64 n = p * r;
    RatPoly phi1(cyclotomic(1)), phip(cyclotomic(p)), phir(cyclotomic(r)), phin(cyclotomic(n));

    PrExponents out;
    out.u_1 = DigitExponent(cyclotomic_inverse_mod(n, 1));
    out.u_p = DigitExponent(cyclotomic_inverse_mod(r, p));
    out.u_r = DigitExponent(cyclotomic_inverse_mod(p, r));
    out.u_pr = DigitExponent(cyclotomic_inverse_mod(1, n));

    // v_1 = (Phi_p Phi_r)^{-1} mod Phi_1 Phi_n, assembled via CRT from the
    // residues modulo the two coprime factors; v_2 likewise with the roles of
    // the factor pairs exchanged.
    RatPoly pr_prod = phip * phir;
    RatPoly v1 = crt_combine(inverse_mod(pr_prod, phin), phin, inverse_mod(pr_prod, phi1), phi1);
    RatPoly one_n_prod = phi1 * phin;
    RatPoly v2 = crt_combine(inverse_mod(one_n_prod, phip), phip, inverse_mod(one_n_prod, phir), phir);
    out.v_1 = DigitExponent(v1);
    out.v_2 = DigitExponent(v2);
    out.nv_1 = out.v_1.times(Integer(n));
    out.nv_2 = out.v_2.times(Integer(n));
    if (!out.nv_1.is_integral() || !out.nv_2.is_integral())
        raise(Err::Internal, "reconstruction_exponents: scaled digits not integral");
    return out;
}

}  // namespace entorus
