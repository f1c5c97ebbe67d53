#ifndef ENTORUS_FQPOLY_HPP
#define ENTORUS_FQPOLY_HPP

#include <optional>
#include <vector>

#include "entorus/fq.hpp"
#include "entorus/rng.hpp"

// Raw polynomial and matrix arithmetic over F_q on word vectors; setup-time
// machinery (irreducibility tests, kernels, curve/isogeny algebra) that is
// never op-counted.

namespace entorus::fqp {

using Poly = std::vector<u64>;  // coefficient i multiplies X^i, trimmed

void trim(Poly& a);
int deg(const Poly& a);
bool is_zero(const Poly& a);

Poly add(const Poly& a, const Poly& b, u64 q);
Poly sub(const Poly& a, const Poly& b, u64 q);
Poly scalar_mul(const Poly& a, u64 k, u64 q);
Poly mul(const Poly& a, const Poly& b, u64 q);
Poly rem(Poly a, const Poly& m, u64 q);  // m need not be monic
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 q);
Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 q);
Poly gcd(Poly a, Poly b, u64 q);  // monic
u64 eval(const Poly& a, u64 x, u64 q);
Poly monic(Poly a, u64 q);

bool is_irreducible_monic(const Poly& f, u64 q);
Poly random_monic(u64 degree, u64 q, Rng& rng);

// Rational roots by full scan (desk-scale q).
std::vector<u64> roots(const Poly& a, u64 q);

struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<u64> a;  // row-major

    u64& at(size_t r, size_t c) { return a[r * cols + c]; }
    u64 at(size_t r, size_t c) const { return a[r * cols + c]; }
    static Mat zero(size_t r, size_t c) { return Mat{r, c, std::vector<u64>(r * c, 0)}; }
    static Mat identity(size_t n);
};

std::vector<u64> mat_vec(const Mat& m, const std::vector<u64>& v, u64 q);
Mat mat_mul(const Mat& a, const Mat& b, u64 q);
std::optional<Mat> mat_inverse(const Mat& m, u64 q);

// Kernel of m (rows x cols) in reduced echelon form: basis columns carry an
// identity block at the returned free positions, so coordinates w.r.t. the
// basis can be read off directly.
struct Kernel {
    Mat basis;                       // cols x dim
    std::vector<size_t> free_cols;   // dim entries
};
Kernel kernel(const Mat& m, u64 q);

}  // namespace entorus::fqp

#endif
