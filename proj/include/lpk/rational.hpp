#ifndef LPK_RATIONAL_HPP
#define LPK_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace lpk {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the Scalar invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Deterministic xorshift generator for reproducible sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state_ = x;
        return x;
    }

    // Uniform integer in [lo, hi].
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace lpk

#endif
