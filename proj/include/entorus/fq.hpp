#ifndef ENTORUS_FQ_HPP
#define ENTORUS_FQ_HPP

#include <cstdint>

#include "entorus/errors.hpp"
#include "entorus/integer.hpp"

// Residue arithmetic mod an odd word-sized prime q.  Residues are canonical
// representatives in [0, q).

namespace entorus::fq {

inline u64 add(u64 a, u64 b, u64 q) {
    u64 s = a + b;
    return s >= q ? s - q : s;
}

inline u64 sub(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + q - b; }

inline u64 neg(u64 a, u64 q) { return a == 0 ? 0 : q - a; }

inline u64 mul(u64 a, u64 b, u64 q) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q);
}

inline u64 pow(u64 b, u64 e, u64 q) {
    u64 r = 1 % q;
    b %= q;
    while (e) {
        if (e & 1) r = mul(r, b, q);
        b = mul(b, b, q);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 q) {
    if (a % q == 0) raise(Err::ZeroElement, "fq::inv of zero");
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(q), nr = static_cast<i64>(a % q);
    while (nr != 0) {
        i64 qq = r / nr, tmp;
        tmp = t - qq * nt; t = nt; nt = tmp;
        tmp = r - qq * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<i64>(q);
    return static_cast<u64>(t);
}

inline u64 from_integer(const Integer& v, u64 q) {
    Integer m = v % q;
    if (m < 0) m += q;
    return static_cast<u64>(m);
}

// Legendre symbol as +1 / 0 / q-1 (Euler criterion).
inline u64 euler(u64 a, u64 q) { return pow(a % q, (q - 1) / 2, q); }

inline bool is_square(u64 a, u64 q) {
    a %= q;
    return a == 0 || euler(a, q) == 1;
}

// Tonelli-Shanks square root mod odd prime q; requires is_square(a, q).
inline u64 sqrt(u64 a, u64 q) {
    a %= q;
    if (a == 0) return 0;
    if (q % 4 == 3) return pow(a, (q + 1) / 4, q);
    u64 s = 0, t = q - 1;
    while ((t & 1) == 0) { t >>= 1; ++s; }
    u64 z = 2;
    while (euler(z, q) != q - 1) ++z;
    u64 m = s;
    u64 c = pow(z, t, q);
    u64 x = pow(a, (t + 1) / 2, q);
    u64 b = pow(a, t, q);
    while (b != 1) {
        u64 i = 0, bb = b;
        while (bb != 1) { bb = mul(bb, bb, q); ++i; }
        u64 e = m - i - 1;
        u64 g = c;
        for (u64 j = 0; j < e; ++j) g = mul(g, g, q);
        m = i;
        c = mul(g, g, q);
        x = mul(x, g, q);
        b = mul(b, c, q);
    }
    return x;
}

}  // namespace entorus::fq

#endif
