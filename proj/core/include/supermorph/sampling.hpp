#pragma once

#include <cstdint>
#include <random>

#include "supermorph/rational.hpp"

namespace supermorph {

/// Deterministic random source. Only raw mt19937_64 outputs are consumed
/// (standard distributions vary between library implementations), so a seed
/// pins the byte-exact result on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive; modulo bias is irrelevant
    /// for the small ranges used here.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi);

    /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long max_num = 3, long max_den = 3);
    Rational nonzero_rational(long max_num = 3, long max_den = 3);

    Vec vector(std::size_t n, long max_num = 3, long max_den = 3);
    Vec nonzero_vector(std::size_t n, long max_num = 3, long max_den = 3);

    /// Derives an independent stream for sub-tasks (per-sample seeds).
    std::uint64_t fork_seed() { return next(); }

private:
    std::mt19937_64 engine_;
};

} // namespace supermorph
