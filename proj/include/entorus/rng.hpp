#ifndef ENTORUS_RNG_HPP
#define ENTORUS_RNG_HPP

#include <random>

#include "entorus/integer.hpp"

namespace entorus {

// Deterministic stream; mt19937_64 output is pinned by the standard, and the
// sampling below avoids std::uniform_int_distribution (implementation
// defined), so seeds reproduce bit-exactly across platforms.
class Rng {
  public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    u64 below(u64 bound) {
        // rejection sampling on the top range
        u64 lim = UINT64_MAX - UINT64_MAX % bound;
        u64 v;
        do { v = eng_(); } while (v >= lim);
        return v % bound;
    }

    Integer integer_below(const Integer& bound) {
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
        unsigned words = (bits + 63) / 64;
        while (true) {
            Integer v = 0;
            for (unsigned i = 0; i < words; ++i) {
                v <<= 64;
                v |= Integer(eng_());
            }
            v >>= (words * 64 - bits);
            if (v < bound) return v;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace entorus

#endif
