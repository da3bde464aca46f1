#include "supermorph/sampling.hpp"

#include "supermorph/errors.hpp"

namespace supermorph {

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ArgumentError("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Rational Rng::rational(long max_num, long max_den) {
    return make_rational(int_in(-max_num, max_num), int_in(1, max_den));
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
    for (;;) {
        Rational r = rational(max_num, max_den);
        if (r != 0) return r;
    }
}

Vec Rng::vector(std::size_t n, long max_num, long max_den) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
    return v;
}

Vec Rng::nonzero_vector(std::size_t n, long max_num, long max_den) {
    for (;;) {
        Vec v = vector(n, max_num, max_den);
        if (!is_zero_vec(v)) return v;
    }
}

} // namespace supermorph
