#pragma once

#include "skoszul/complex.hpp"
#include "skoszul/linalg.hpp"

namespace skoszul {

struct StrandHomologyRow {
    StrandKey key;
    int degree = 0;
    std::size_t dim = 0;      // dimension of the (key, degree) component
    std::size_t rank_in = 0;  // rank of the incoming differential
    std::size_t rank_out = 0; // rank of the outgoing differential
    std::size_t h_dim = 0;    // dim ker(out) - rank(in)
};

struct HomologyClass {
    StrandKey key;
    int degree = 0;
    SuperPoly generator; // cycle, nonzero mod image, leading coefficient 1
    Parity parity = Parity::even;
};

struct StrandHomology {
    std::vector<StrandHomologyRow> rows; // rows with dim > 0, ascending degree
    std::vector<HomologyClass> classes;
};

/// Homology of one strand, all homological degrees. Checks that consecutive
/// differentials compose to zero before trusting any rank.
StrandHomology homology_of_strand(const ComplexSpec& spec, StrandKey key);

/// The unique c with cycle = c * generator + delta(tau) for tau ranging over
/// the boundary's domain. Grassmann coefficients are allowed in `cycle`; the
/// boundary entries must be field-valued and the system is solved per
/// Grassmann monomial. Throws NoSolutionError when the cycle is not in
/// span(generator) + image, NonInvertibleError when the generator itself is
/// in the image.
Scalar class_coefficient(const SuperPoly& cycle, const SuperPoly& generator,
                         const SparseMatrix& boundary);

/// True when `cycle` lies in the column span of `boundary` (rows must cover
/// the cycle's monomials; Grassmann coefficients handled per monomial).
bool in_image(const SuperPoly& cycle, const SparseMatrix& boundary);

} // namespace skoszul
