#pragma once
/**
 * @file sampling.hpp
 * @brief Seeded random rationals and vectors.
 *
 * Components are p/q with p in [-9, 9] and q in [1, 4]. Values are derived
 * from raw mt19937_64 output with plain modular reduction so the stream is
 * identical on every standard library.
 */

#include <cstdint>
#include <random>

#include "rational.hpp"
#include "vector.hpp"

namespace xprod {

class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

    Rational scalar() {
        const long p = static_cast<long>(rng_() % 19) - 9;
        const unsigned long q = static_cast<unsigned long>(rng_() % 4) + 1;
        return Rational(p, q);
    }

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

    Vector vector(std::size_t n) {
        std::vector<Rational> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.push_back(scalar());
        return Vector(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

} // namespace xprod
