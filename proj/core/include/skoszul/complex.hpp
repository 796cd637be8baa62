#pragma once

#include <vector>

#include "skoszul/sparse_matrix.hpp"

namespace skoszul {

enum class ComplexKind { classical, super_koszul, dual_super_koszul };

/// One of the three complexes, with its coefficient ring and alphabet.
/// The classical complex uses x1..xN | y1..yN with differential given by
/// multiplication with sum x_i*y_i; the super Koszul complex differentiates
/// the (l, ch) factor and multiplies the (x, th) partner back in; the dual
/// complex multiplies by sum x_i*dch_i + th_j*dl_j.
struct ComplexSpec {
    ComplexKind kind;
    int p = 0; // even rank (super), or N (classical)
    int q = 0; // odd rank (super)
    RingSpec ring;
    SuperPoly::Registry registry;

    static ComplexSpec classical(int n, const RingSpec& ring);
    static ComplexSpec super_koszul(int p, int q, const RingSpec& ring);
    static ComplexSpec dual_super_koszul(int p, int q, const RingSpec& ring);

    /// Homological degree shift of the differential: -1 for the super Koszul
    /// complex, +1 for its dual and for the classical complex.
    int delta_shift() const { return kind == ComplexKind::super_koszul ? -1 : 1; }

    std::string kind_name() const;
};

/// Conserved bidegree label; the differential and homotopy of a complex act
/// strand by strand. Super: (deg x + deg ch, deg th + deg l). Dual:
/// (deg x - deg dch, deg th - deg dl). Classical: (deg x - deg y, 0).
struct StrandKey {
    long m1 = 0;
    long m2 = 0;
    friend auto operator<=>(const StrandKey&, const StrandKey&) = default;
};

/// Ordered finite monomial basis of one (strand, homological degree)
/// component.
struct StrandBasis {
    StrandKey key;
    int degree = 0;
    std::vector<Monomial> monomials; // canonical term order

    std::size_t dim() const { return monomials.size(); }
    /// Index of a monomial in this basis; throws if absent.
    std::size_t index_of(const Monomial& m) const;
};

StrandKey strand_of(const ComplexSpec& spec, const Monomial& m);
int homological_degree(const ComplexSpec& spec, const Monomial& m);

StrandBasis enumerate_strand(const ComplexSpec& spec, StrandKey key, int degree);

/// Inclusive homological degree range in which the strand can be nonempty.
std::pair<int, int> strand_degree_range(const ComplexSpec& spec, StrandKey key);

/// All strand keys swept by a window: super m1,m2 >= 0 with m1+m2 <= w;
/// classical m1 in [-N, w], dual m1 in [-p-w, w] and m2 in [q-w, q].
std::vector<StrandKey> strand_window(const ComplexSpec& spec, int w);

SuperPoly apply_delta(const ComplexSpec& spec, const SuperPoly& f);
/// The unnormalized operator opposite to the differential: sum ch_i*d/dx_i +
/// l_j*d/dth_j on the super Koszul complex, sum d/dx_i d/dy_i on the
/// classical one.
SuperPoly apply_epsilon(const ComplexSpec& spec, const SuperPoly& f);
/// The homotopy: epsilon normalized per bihomogeneous term; throws
/// NonInvertibleNormalizerError when the normalizer vanishes in the field.
SuperPoly apply_homotopy(const ComplexSpec& spec, const SuperPoly& f);

/// The term's homotopy normalizer: total degree for the super complex,
/// N - deg y + deg x for the classical one.
long homotopy_normalizer(const ComplexSpec& spec, const Monomial& m);

SparseMatrix differential_matrix(const ComplexSpec& spec, StrandKey key, int degree);
SparseMatrix homotopy_matrix(const ComplexSpec& spec, StrandKey key, int degree);
SparseMatrix epsilon_matrix(const ComplexSpec& spec, StrandKey key, int degree);

/// Matrix of the differential on an arbitrary list of domain monomials; the
/// codomain basis is extended to cover `extra_rows` plus all images.
SparseMatrix differential_matrix_on(const ComplexSpec& spec,
                                    const std::vector<Monomial>& domain,
                                    const std::vector<Monomial>& extra_rows = {});

/// Restriction of a polynomial to one (strand, degree) component.
SuperPoly component_of(const ComplexSpec& spec, const SuperPoly& f, StrandKey key, int degree);

/// th1..thq * dch1..dchp, the generator of the dual complex's homology.
SuperPoly dual_generator(const ComplexSpec& spec);

/// Coordinates of f in a strand basis; throws if f has terms outside it.
std::vector<Scalar> coordinates(const ComplexSpec& spec, const StrandBasis& basis,
                                const SuperPoly& f);

} // namespace skoszul
