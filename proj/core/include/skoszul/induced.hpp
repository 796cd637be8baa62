#pragma once

#include "skoszul/homology.hpp"
#include "skoszul/supermatrix.hpp"

namespace skoszul {

/// The ring automorphism of the dual complex induced by an automorphism of
/// the free module: x and th transform by the matrix columns, the dual
/// variables dch and dl by the rows of the inverse matrix (so that the
/// multiplication element of the differential is preserved).
struct DualSubstitution {
    ComplexSpec spec; // dual complex over the matrix's ring
    std::vector<SuperPoly> x_image;    // size p
    std::vector<SuperPoly> th_image;   // size q
    std::vector<SuperPoly> dch_image;  // size p
    std::vector<SuperPoly> dl_image;   // size q

    SuperPoly apply(const SuperPoly& f) const;
    SuperPoly image_of(VarRef v) const;
};

DualSubstitution dual_substitution(const SuperMatrix& m);

struct InducedActionResult {
    Scalar coefficient;         // action on the homology generator
    Scalar coefficient_inverse; // the dual-module reading
    Scalar berezinian;
    Scalar berezinian_inverse;
    bool matches_inverse_ber = false;
    SuperPoly transformed; // full image of the generator
};

/// Substitutes the transformed variables into th1..thq * dch1..dchp and
/// expresses the class of the result as a multiple of the generator.
/// When `verify_side_strands` is set, the components of the image lying in
/// other strands are checked to be boundaries.
InducedActionResult induced_action_on_generator(const SuperMatrix& m,
                                                bool verify_side_strands = true);

} // namespace skoszul
