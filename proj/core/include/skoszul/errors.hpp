#pragma once

#include <stdexcept>
#include <string>

namespace skoszul {

/// Operands live in different coefficient rings or variable registries.
class RingMismatchError : public std::invalid_argument {
public:
    explicit RingMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Inversion of an element that has no inverse (zero body, odd parity, ...).
class NonInvertibleError : public std::domain_error {
public:
    explicit NonInvertibleError(const std::string& what)
        : std::domain_error(what) {}
};

/// The homotopy normalizer k+i vanishes in the coefficient field.
class NonInvertibleNormalizerError : public NonInvertibleError {
public:
    explicit NonInvertibleNormalizerError(long normalizer)
        : NonInvertibleError("homotopy normalizer " + std::to_string(normalizer) +
                             " is not invertible in the coefficient field"),
          normalizer_(normalizer) {}

    long normalizer() const { return normalizer_; }

private:
    long normalizer_;
};

/// A linear system that was expected to be solvable has no solution.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace skoszul
