#include "entorus/integer.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/miller_rabin.hpp>

namespace entorus {

Integer pow_int(const Integer& base, u64 exp) {
    Integer r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer r0 = a, r1 = b;
    Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1, t;
        t = r0 - q * r1; r0 = r1; r1 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return r0;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer x, y;
    Integer g = ext_gcd(a % m, m, x, y);
    if (g != 1) raise(Err::InvalidArgument, "mod_inverse: arguments not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 40);
}

namespace {

Integer rho_step(const Integer& x, const Integer& c, const Integer& n) {
    return (x * x + c) % n;
}

Integer pollard_rho(const Integer& n) {
    // Brent's cycle variant; n composite, odd, not a perfect power of a small prime.
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer ys = y, prod = 1;
        u64 lam = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < lam; ++i) y = rho_step(y, c, n);
            u64 k = 0;
            while (k < lam && d == 1) {
                ys = y;
                u64 lim = std::min<u64>(128, lam - k);
                prod = 1;
                for (u64 i = 0; i < lim; ++i) {
                    y = rho_step(y, c, n);
                    Integer diff = x > y ? x - y : y - x;
                    if (diff != 0) prod = prod * diff % n;
                }
                d = gcd(prod, n);
                k += lim;
            }
            lam *= 2;
        }
        if (d == n) {
            // backtrack one-by-one
            d = 1;
            while (d == 1) {
                ys = rho_step(ys, c, n);
                Integer diff = x > ys ? x - ys : ys - x;
                d = gcd(diff, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(Integer n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factorize(const Integer& n) {
    if (n < 1) raise(Err::InvalidArgument, "factorize: n must be positive");
    std::map<Integer, unsigned> out;
    Integer m = n;
    for (u64 p = 2; p < 100000 && Integer(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (m % p == 0) {
            out[Integer(p)] += 1;
            m /= p;
        }
    }
    factor_rec(m, out);
    return out;
}

// ---- word-sized helpers ----

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic base set for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<u64> prime_factors_u64(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factor_u64(n)) out.push_back(p);
    return out;
}

std::vector<u64> divisors_u64(u64 n) {
    std::vector<u64> out{1};
    for (auto& [p, e] : factor_u64(n)) {
        size_t sz = out.size();
        u64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius_u64(u64 n) {
    int sign = 1;
    for (auto& [p, e] : factor_u64(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 totient_u64(u64 n) {
    u64 t = n;
    for (auto& [p, e] : factor_u64(n)) t -= t / p;
    return t;
}

bool is_squarefree_u64(u64 n) { return moebius_u64(n) != 0; }

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<u64> primes_up_to(u64 bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<u64> out;
    for (u64 i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

}  // namespace entorus
