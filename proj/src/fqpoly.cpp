#include "entorus/fqpoly.hpp"

namespace entorus::fqp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly add(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = fq::add(x, y, q);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = fq::sub(x, y, q);
    }
    trim(r);
    return r;
}

Poly scalar_mul(const Poly& a, u64 k, u64 q) {
    Poly r = a;
    for (auto& v : r) v = fq::mul(v, k, q);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 q) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fq::add(r[i + j], fq::mul(a[i], b[j], q), q);
    }
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& m, u64 q) {
    if (is_zero(m)) raise(Err::InvalidArgument, "fqp::rem by zero polynomial");
    int dm = deg(m);
    u64 lead_inv = fq::inv(m.back(), q);
    while (deg(a) >= dm) {
        u64 f = fq::mul(a.back(), lead_inv, q);
        size_t shift = a.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j)
            a[shift + j] = fq::sub(a[shift + j], fq::mul(f, m[j], q), q);
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 q) { return rem(mul(a, b, q), m, q); }

Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 q) {
    Poly r{1};
    if (e == 0) return r;
    Poly b = rem(base, m, q);
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e));
    for (int i = static_cast<int>(bits); i >= 0; --i) {
        r = mulmod(r, r, m, q);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mulmod(r, b, m, q);
    }
    return r;
}

Poly monic(Poly a, u64 q) {
    if (is_zero(a)) return a;
    return scalar_mul(a, fq::inv(a.back(), q), q);
}

Poly gcd(Poly a, Poly b, u64 q) {
    while (!is_zero(b)) {
        Poly r = rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), q);
}

u64 eval(const Poly& a, u64 x, u64 q) {
    u64 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = fq::add(fq::mul(r, x, q), a[i], q);
    return r;
}

bool is_irreducible_monic(const Poly& f, u64 q) {
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    Poly x{0, 1};
    Poly xq = x;
    auto nfac = prime_factors_u64(static_cast<u64>(n));
    for (int i = 1; i <= n; ++i) {
        xq = powmod(xq, Integer(q), f, q);
        for (u64 l : nfac) {
            if (static_cast<u64>(i) == static_cast<u64>(n) / l) {
                Poly g = gcd(sub(xq, x, q), f, q);
                if (deg(g) != 0) return false;
            }
        }
    }
    // after n Frobenius steps X^{q^n} must reduce to X
    return xq == x;
}

Poly random_monic(u64 degree, u64 q, Rng& rng) {
    Poly f(degree + 1, 0);
    f[degree] = 1;
    for (u64 i = 0; i < degree; ++i) f[i] = rng.below(q);
    return f;
}

std::vector<u64> roots(const Poly& a, u64 q) {
    std::vector<u64> out;
    for (u64 x = 0; x < q; ++x)
        if (eval(a, x, q) == 0) out.push_back(x);
    return out;
}

Mat Mat::identity(size_t n) {
    Mat m = zero(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<u64> mat_vec(const Mat& m, const std::vector<u64>& v, u64 q) {
    std::vector<u64> r(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        unsigned __int128 acc = 0;
        for (size_t j = 0; j < m.cols; ++j) acc += static_cast<unsigned __int128>(m.at(i, j)) * v[j];
        r[i] = static_cast<u64>(acc % q);
    }
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b, u64 q) {
    Mat r = Mat::zero(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            u64 v = a.at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = fq::add(r.at(i, j), fq::mul(v, b.at(k, j), q), q);
        }
    return r;
}

std::optional<Mat> mat_inverse(const Mat& m, u64 q) {
    const size_t n = m.rows;
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.a[piv * n + j], a.a[col * n + j]);
                std::swap(inv.a[piv * n + j], inv.a[col * n + j]);
            }
        u64 pin = fq::inv(a.at(col, col), q);
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) = fq::mul(a.at(col, j), pin, q);
            inv.at(col, j) = fq::mul(inv.at(col, j), pin, q);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            u64 f = a.at(i, col);
            if (!f) continue;
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) = fq::sub(a.at(i, j), fq::mul(f, a.at(col, j), q), q);
                inv.at(i, j) = fq::sub(inv.at(i, j), fq::mul(f, inv.at(col, j), q), q);
            }
        }
    }
    return inv;
}

Kernel kernel(const Mat& m, u64 q) {
    Mat a = m;
    const size_t rows = a.rows, cols = a.cols;
    std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a.a[piv * cols + j], a.a[r * cols + j]);
        u64 pin = fq::inv(a.at(r, c), q);
        for (size_t j = 0; j < cols; ++j) a.at(r, j) = fq::mul(a.at(r, j), pin, q);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            u64 f = a.at(i, c);
            if (!f) continue;
            for (size_t j = 0; j < cols; ++j)
                a.at(i, j) = fq::sub(a.at(i, j), fq::mul(f, a.at(r, j), q), q);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] == SIZE_MAX) free_cols.push_back(c);
    Kernel k;
    k.free_cols = free_cols;
    k.basis = Mat::zero(cols, free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        size_t fc = free_cols[j];
        k.basis.at(fc, j) = 1;
        for (size_t c = 0; c < cols; ++c) {
            size_t pr = pivot_of_col[c];
            if (pr == SIZE_MAX) continue;
            k.basis.at(c, j) = fq::neg(a.at(pr, fc), q);
        }
    }
    return k;
}

}  // namespace entorus::fqp
