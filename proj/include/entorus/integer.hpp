#ifndef ENTORUS_INTEGER_HPP
#define ENTORUS_INTEGER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entorus/errors.hpp"

namespace entorus {

using Integer = boost::multiprecision::cpp_int;
using boost::multiprecision::gcd;
using boost::multiprecision::powm;

using u64 = std::uint64_t;
using i64 = std::int64_t;

Integer pow_int(const Integer& base, u64 exp);

// Extended gcd: returns g and sets x, y with a*x + b*y = g, g >= 0.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

// Inverse of a modulo m (m > 1); throws InvalidArgument if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

bool is_probable_prime(const Integer& n);

// Full factorization by trial division + Pollard rho (desk scale).
std::map<Integer, unsigned> factorize(const Integer& n);

// ---- word-sized number theory ----

bool is_prime_u64(u64 n);
std::vector<u64> divisors_u64(u64 n);                    // sorted ascending
std::vector<std::pair<u64, int>> factor_u64(u64 n);      // (prime, exponent)
std::vector<u64> prime_factors_u64(u64 n);               // distinct primes
int moebius_u64(u64 n);                                  // 0 if not squarefree
u64 totient_u64(u64 n);
bool is_squarefree_u64(u64 n);
u64 isqrt_u64(u64 n);
std::vector<u64> primes_up_to(u64 bound);

}  // namespace entorus

#endif
