#pragma once

#include <cstdint>
#include <random>

#include "skoszul/supermatrix.hpp"

namespace skoszul {

/// Deterministic RNG wrapper; bounded draws use rejection sampling so the
/// sequence is reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n);
    long range(long lo, long hi); // inclusive
    bool chance(unsigned num, unsigned den);

private:
    std::mt19937_64 eng_;
};

/// Random element with small integer coefficients, homogeneous of the given
/// parity. Even elements get an integer body plus a sparse even soul; odd
/// elements a sparse combination of odd generator products.
Scalar random_homogeneous_scalar(Rng& rng, const RingSpec& ring, Parity parity);

/// Random invertible supermatrix: integer bodies for A and D redrawn until
/// their determinants are invertible, sparse Grassmann souls and odd blocks.
SuperMatrix random_invertible_supermatrix(Rng& rng, const RingSpec& ring, int p, int q);

} // namespace skoszul
