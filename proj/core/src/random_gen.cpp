#include "skoszul/random_gen.hpp"

#include <bit>

namespace skoszul {

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("empty range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % n;
}

long Rng::range(long lo, long hi)
{
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(unsigned num, unsigned den)
{
    return below(den) < num;
}

namespace {

/// Sparse combination of generator products of the given parity, small
/// integer coefficients, possibly zero.
Scalar random_soul(Rng& rng, const RingSpec& ring, Parity parity, unsigned density_den)
{
    Scalar out = Scalar::zero(ring);
    const std::uint32_t limit = std::uint32_t{1} << ring.generators;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) % 2 != static_cast<unsigned>(parity))
            continue;
        if (!rng.chance(1, density_den))
            continue;
        long c = rng.range(-2, 2);
        if (c != 0)
            out = out + Scalar::term(ring, mask, FieldElem::from_int(ring.field, c));
    }
    return out;
}

} // namespace

Scalar random_homogeneous_scalar(Rng& rng, const RingSpec& ring, Parity parity)
{
    if (parity == Parity::odd)
        return random_soul(rng, ring, Parity::odd, 3);
    long body;
    do {
        body = rng.range(-3, 3);
    } while (body == 0);
    return Scalar::from_int(ring, body) + random_soul(rng, ring, Parity::even, 4);
}

SuperMatrix random_invertible_supermatrix(Rng& rng, const RingSpec& ring, int p, int q)
{
    SuperMatrix m(ring, p, q);
    auto fill_even_block = [&](int n, auto&& setter) {
        // redraw integer bodies until the body matrix is invertible
        while (true) {
            std::vector<long> body(static_cast<std::size_t>(n) * n);
            for (auto& v : body)
                v = rng.range(-3, 3);
            EvenMatrix probe(ring, static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    probe.set(i, j, Scalar::from_int(ring, body[static_cast<std::size_t>(i) * n + j]));
            if (n > 0 && !probe.body_invertible())
                continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    setter(i, j,
                           Scalar::from_int(ring, body[static_cast<std::size_t>(i) * n + j]) +
                               random_soul(rng, ring, Parity::even, 4));
            return;
        }
    };
    fill_even_block(p, [&](int i, int j, Scalar v) { m.set_a(i, j, std::move(v)); });
    fill_even_block(q, [&](int i, int j, Scalar v) { m.set_d(i, j, std::move(v)); });
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            m.set_b(i, j, random_homogeneous_scalar(rng, ring, Parity::odd));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j)
            m.set_c(i, j, random_homogeneous_scalar(rng, ring, Parity::odd));
    return m;
}

} // namespace skoszul
