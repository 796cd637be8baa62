#include "skoszul/complex.hpp"

#include <algorithm>
#include <bit>

namespace skoszul {
namespace {

/// Exponent vectors of length k summing to d, ascending lex order.
void compositions(unsigned d, std::size_t k, std::vector<std::vector<std::uint32_t>>& out)
{
    out.clear();
    if (k == 0) {
        if (d == 0)
            out.push_back({});
        return;
    }
    std::vector<std::uint32_t> cur(k, 0);
    // recursive enumeration without recursion: odometer over first k-1 slots
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned left) {
        if (slot == k - 1) {
            cur[slot] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[slot] = e;
            rec(slot + 1, left - e);
        }
    };
    rec(0, d);
}

/// Bitmasks over n positions with exactly k bits, ascending.
std::vector<std::uint64_t> subsets(std::size_t n, long k)
{
    std::vector<std::uint64_t> out;
    if (k < 0 || static_cast<std::size_t>(k) > n)
        return out;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m)
        if (std::popcount(m) == k)
            out.push_back(m);
    return out;
}

SuperPoly delta_element(const ComplexSpec& spec)
{
    // the odd multiplication element of the dual and classical differentials
    SuperPoly t = SuperPoly::zero(spec.registry, spec.ring);
    if (spec.kind == ComplexKind::classical) {
        for (int i = 1; i <= spec.p; ++i)
            t = t + SuperPoly::variable(spec.registry, spec.ring,
                                        spec.registry->ref(Factor::classical_b, Parity::even, i)) *
                        SuperPoly::variable(spec.registry, spec.ring,
                                            spec.registry->ref(Factor::classical_u, Parity::odd, i));
        return t;
    }
    for (int i = 1; i <= spec.p; ++i)
        t = t + SuperPoly::variable(spec.registry, spec.ring,
                                    spec.registry->ref(Factor::r, Parity::even, i)) *
                    SuperPoly::variable(spec.registry, spec.ring,
                                        spec.registry->ref(Factor::pi_dual, Parity::odd, i));
    for (int j = 1; j <= spec.q; ++j)
        t = t + SuperPoly::variable(spec.registry, spec.ring,
                                    spec.registry->ref(Factor::r, Parity::odd, j)) *
                    SuperPoly::variable(spec.registry, spec.ring,
                                        spec.registry->ref(Factor::pi_dual, Parity::even, j));
    return t;
}

void check_context(const ComplexSpec& spec, const SuperPoly& f)
{
    if (!(f.ring() == spec.ring))
        throw RingMismatchError("polynomial ring does not match complex ring");
    if (f.registry() != spec.registry && !(*f.registry() == *spec.registry))
        throw RingMismatchError("polynomial registry does not match complex registry");
}

} // namespace

ComplexSpec ComplexSpec::classical(int n, const RingSpec& ring)
{
    if (n < 0)
        throw std::invalid_argument("classical complex needs N >= 0");
    return {ComplexKind::classical, n, 0, ring, VarRegistry::classical(n)};
}

ComplexSpec ComplexSpec::super_koszul(int p, int q, const RingSpec& ring)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("super Koszul complex needs p, q >= 0");
    return {ComplexKind::super_koszul, p, q, ring, VarRegistry::super_koszul(p, q)};
}

ComplexSpec ComplexSpec::dual_super_koszul(int p, int q, const RingSpec& ring)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("dual super Koszul complex needs p, q >= 0");
    return {ComplexKind::dual_super_koszul, p, q, ring, VarRegistry::dual_super_koszul(p, q)};
}

std::string ComplexSpec::kind_name() const
{
    switch (kind) {
    case ComplexKind::classical: return "classical";
    case ComplexKind::super_koszul: return "super-koszul";
    case ComplexKind::dual_super_koszul: return "dual-super-koszul";
    }
    return "?";
}

std::size_t StrandBasis::index_of(const Monomial& m) const
{
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, MonoOrder{});
    if (it == monomials.end() || !(*it == m))
        throw std::invalid_argument("monomial not in strand basis");
    return static_cast<std::size_t>(it - monomials.begin());
}

StrandKey strand_of(const ComplexSpec& spec, const Monomial& m)
{
    const VarRegistry& reg = *spec.registry;
    switch (spec.kind) {
    case ComplexKind::super_koszul:
        return {m.class_degree(reg, Factor::r, Parity::even) +
                    m.class_degree(reg, Factor::pi, Parity::odd),
                m.class_degree(reg, Factor::r, Parity::odd) +
                    m.class_degree(reg, Factor::pi, Parity::even)};
    case ComplexKind::dual_super_koszul:
        return {m.class_degree(reg, Factor::r, Parity::even) -
                    m.class_degree(reg, Factor::pi_dual, Parity::odd),
                m.class_degree(reg, Factor::r, Parity::odd) -
                    m.class_degree(reg, Factor::pi_dual, Parity::even)};
    case ComplexKind::classical:
        return {m.class_degree(reg, Factor::classical_b, Parity::even) -
                    m.class_degree(reg, Factor::classical_u, Parity::odd),
                0};
    }
    return {};
}

int homological_degree(const ComplexSpec& spec, const Monomial& m)
{
    const VarRegistry& reg = *spec.registry;
    switch (spec.kind) {
    case ComplexKind::super_koszul:
        return static_cast<int>(m.class_degree(reg, Factor::pi, Parity::odd) +
                                m.class_degree(reg, Factor::pi, Parity::even));
    case ComplexKind::dual_super_koszul:
        return static_cast<int>(m.class_degree(reg, Factor::pi_dual, Parity::odd) +
                                m.class_degree(reg, Factor::pi_dual, Parity::even));
    case ComplexKind::classical:
        return static_cast<int>(m.class_degree(reg, Factor::classical_u, Parity::odd));
    }
    return 0;
}

StrandBasis enumerate_strand(const ComplexSpec& spec, StrandKey key, int degree)
{
    StrandBasis basis{key, degree, {}};
    if (degree < 0)
        return basis;
    const std::size_t p = static_cast<std::size_t>(spec.p);
    const std::size_t q = static_cast<std::size_t>(spec.q);
    std::vector<std::vector<std::uint32_t>> left_exps, right_exps;

    auto emit = [&](const std::vector<std::uint32_t>& xe, const std::vector<std::uint32_t>& ye,
                    std::uint64_t low_mask, std::uint64_t high_mask, std::size_t low_width) {
        Monomial m;
        m.even_exp.reserve(xe.size() + ye.size());
        m.even_exp.insert(m.even_exp.end(), xe.begin(), xe.end());
        m.even_exp.insert(m.even_exp.end(), ye.begin(), ye.end());
        m.odd_mask = low_mask | (high_mask << low_width);
        basis.monomials.push_back(std::move(m));
    };

    switch (spec.kind) {
    case ComplexKind::super_koszul: {
        if (key.m1 < 0 || key.m2 < 0)
            return basis;
        for (long c = 0; c <= std::min<long>({static_cast<long>(p), key.m1, degree}); ++c) {
            long d = degree - c;
            if (d < 0 || d > key.m2)
                continue;
            long a = key.m1 - c;
            long b = key.m2 - d;
            if (b < 0 || b > static_cast<long>(q))
                continue;
            compositions(static_cast<unsigned>(a), p, left_exps);
            compositions(static_cast<unsigned>(d), q, right_exps);
            auto theta_masks = subsets(q, b);
            auto chi_masks = subsets(p, c);
            for (const auto& xe : left_exps)
                for (const auto& le : right_exps)
                    for (auto tm : theta_masks)
                        for (auto cm : chi_masks)
                            emit(xe, le, tm, cm, q);
        }
        break;
    }
    case ComplexKind::dual_super_koszul: {
        for (long c = std::max<long>(0, -key.m1); c <= std::min<long>(static_cast<long>(p), degree);
             ++c) {
            long d = degree - c;
            if (d < 0 || d < -key.m2 || d > static_cast<long>(q) - key.m2)
                continue;
            long a = key.m1 + c;
            long b = key.m2 + d;
            compositions(static_cast<unsigned>(a), p, left_exps);
            compositions(static_cast<unsigned>(d), q, right_exps);
            auto theta_masks = subsets(q, b);
            auto dchi_masks = subsets(p, c);
            for (const auto& xe : left_exps)
                for (const auto& dle : right_exps)
                    for (auto tm : theta_masks)
                        for (auto dm : dchi_masks)
                            emit(xe, dle, tm, dm, q);
        }
        break;
    }
    case ComplexKind::classical: {
        const std::size_t n = p;
        long a = key.m1 + degree;
        if (key.m2 != 0 || a < 0 || degree > static_cast<int>(n))
            return basis;
        compositions(static_cast<unsigned>(a), n, left_exps);
        auto y_masks = subsets(n, degree);
        std::vector<std::uint32_t> none;
        for (const auto& xe : left_exps)
            for (auto ym : y_masks)
                emit(xe, none, ym, 0, n);
        break;
    }
    }
    std::sort(basis.monomials.begin(), basis.monomials.end(), MonoOrder{});
    return basis;
}

std::pair<int, int> strand_degree_range(const ComplexSpec& spec, StrandKey key)
{
    switch (spec.kind) {
    case ComplexKind::super_koszul: {
        if (key.m1 < 0 || key.m2 < 0)
            return {0, -1};
        int hi = static_cast<int>(std::min<long>(spec.p, key.m1) + key.m2);
        return {0, hi};
    }
    case ComplexKind::dual_super_koszul: {
        long c_min = std::max<long>(0, -key.m1);
        long d_min = std::max<long>(0, -key.m2);
        long d_max = spec.q - key.m2;
        if (c_min > spec.p || d_min > d_max)
            return {0, -1};
        return {static_cast<int>(c_min + d_min), static_cast<int>(spec.p + d_max)};
    }
    case ComplexKind::classical: {
        if (key.m2 != 0 || key.m1 < -spec.p)
            return {0, -1};
        int lo = static_cast<int>(std::max<long>(0, -key.m1));
        return {lo, spec.p};
    }
    }
    return {0, -1};
}

std::vector<StrandKey> strand_window(const ComplexSpec& spec, int w)
{
    std::vector<StrandKey> keys;
    switch (spec.kind) {
    case ComplexKind::super_koszul:
        for (long m1 = 0; m1 <= w; ++m1)
            for (long m2 = 0; m1 + m2 <= w; ++m2)
                keys.push_back({m1, m2});
        break;
    case ComplexKind::dual_super_koszul:
        for (long m1 = -spec.p - w; m1 <= w; ++m1)
            for (long m2 = spec.q - w; m2 <= spec.q; ++m2)
                keys.push_back({m1, m2});
        break;
    case ComplexKind::classical:
        for (long m1 = -spec.p; m1 <= w; ++m1)
            keys.push_back({m1, 0});
        break;
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

SuperPoly apply_delta(const ComplexSpec& spec, const SuperPoly& f)
{
    check_context(spec, f);
    if (spec.kind != ComplexKind::super_koszul)
        return delta_element(spec) * f;
    SuperPoly out = SuperPoly::zero(spec.registry, spec.ring);
    for (int i = 1; i <= spec.p; ++i) {
        VarRef chi = spec.registry->ref(Factor::pi, Parity::odd, i);
        VarRef x = spec.registry->ref(Factor::r, Parity::even, i);
        out = out + SuperPoly::variable(spec.registry, spec.ring, x) * partial(chi, f);
    }
    for (int j = 1; j <= spec.q; ++j) {
        VarRef ell = spec.registry->ref(Factor::pi, Parity::even, j);
        VarRef theta = spec.registry->ref(Factor::r, Parity::odd, j);
        out = out + SuperPoly::variable(spec.registry, spec.ring, theta) * partial(ell, f);
    }
    return out;
}

SuperPoly apply_epsilon(const ComplexSpec& spec, const SuperPoly& f)
{
    check_context(spec, f);
    if (spec.kind == ComplexKind::dual_super_koszul)
        throw std::invalid_argument("the dual super Koszul complex has no epsilon operator");
    SuperPoly out = SuperPoly::zero(spec.registry, spec.ring);
    if (spec.kind == ComplexKind::classical) {
        for (int i = 1; i <= spec.p; ++i) {
            VarRef x = spec.registry->ref(Factor::classical_b, Parity::even, i);
            VarRef y = spec.registry->ref(Factor::classical_u, Parity::odd, i);
            out = out + partial(x, partial(y, f));
        }
        return out;
    }
    for (int i = 1; i <= spec.p; ++i) {
        VarRef x = spec.registry->ref(Factor::r, Parity::even, i);
        VarRef chi = spec.registry->ref(Factor::pi, Parity::odd, i);
        out = out + SuperPoly::variable(spec.registry, spec.ring, chi) * partial(x, f);
    }
    for (int j = 1; j <= spec.q; ++j) {
        VarRef theta = spec.registry->ref(Factor::r, Parity::odd, j);
        VarRef ell = spec.registry->ref(Factor::pi, Parity::even, j);
        out = out + SuperPoly::variable(spec.registry, spec.ring, ell) * partial(theta, f);
    }
    return out;
}

long homotopy_normalizer(const ComplexSpec& spec, const Monomial& m)
{
    const VarRegistry& reg = *spec.registry;
    switch (spec.kind) {
    case ComplexKind::super_koszul:
        return static_cast<long>(m.total_degree());
    case ComplexKind::classical:
        return spec.p - m.class_degree(reg, Factor::classical_u, Parity::odd) +
               m.class_degree(reg, Factor::classical_b, Parity::even);
    case ComplexKind::dual_super_koszul:
        break;
    }
    throw std::invalid_argument("the dual super Koszul complex has no homotopy operator");
}

SuperPoly apply_homotopy(const ComplexSpec& spec, const SuperPoly& f)
{
    check_context(spec, f);
    if (spec.kind == ComplexKind::dual_super_koszul)
        throw std::invalid_argument("the dual super Koszul complex has no homotopy operator");
    SuperPoly out = SuperPoly::zero(spec.registry, spec.ring);
    for (const auto& [m, c] : f.terms()) {
        long n = homotopy_normalizer(spec, m);
        FieldElem nf = FieldElem::from_int(spec.ring.field, n);
        if (nf.is_zero())
            throw NonInvertibleNormalizerError(n);
        SuperPoly term = SuperPoly::from_term(spec.registry, spec.ring, m, c);
        out = out + apply_epsilon(spec, term).scaled(nf.inverse());
    }
    return out;
}

namespace {

SparseMatrix operator_matrix(const ComplexSpec& spec, const StrandBasis& domain,
                             const StrandBasis& codomain,
                             const std::function<SuperPoly(const SuperPoly&)>& op)
{
    SparseMatrix m(spec.ring, codomain.monomials, domain.monomials);
    for (std::size_t j = 0; j < domain.dim(); ++j) {
        SuperPoly image = op(SuperPoly::from_term(spec.registry, spec.ring, domain.monomials[j],
                                                  Scalar::one(spec.ring)));
        for (const auto& [mono, c] : image.terms())
            m.set(codomain.index_of(mono), j, c);
    }
    return m;
}

} // namespace

SparseMatrix differential_matrix(const ComplexSpec& spec, StrandKey key, int degree)
{
    StrandBasis domain = enumerate_strand(spec, key, degree);
    StrandBasis codomain = enumerate_strand(spec, key, degree + spec.delta_shift());
    return operator_matrix(spec, domain, codomain,
                           [&](const SuperPoly& f) { return apply_delta(spec, f); });
}

SparseMatrix homotopy_matrix(const ComplexSpec& spec, StrandKey key, int degree)
{
    StrandBasis domain = enumerate_strand(spec, key, degree);
    StrandBasis codomain = enumerate_strand(spec, key, degree - spec.delta_shift());
    return operator_matrix(spec, domain, codomain,
                           [&](const SuperPoly& f) { return apply_homotopy(spec, f); });
}

SparseMatrix epsilon_matrix(const ComplexSpec& spec, StrandKey key, int degree)
{
    StrandBasis domain = enumerate_strand(spec, key, degree);
    StrandBasis codomain = enumerate_strand(spec, key, degree - spec.delta_shift());
    return operator_matrix(spec, domain, codomain,
                           [&](const SuperPoly& f) { return apply_epsilon(spec, f); });
}

SparseMatrix differential_matrix_on(const ComplexSpec& spec, const std::vector<Monomial>& domain,
                                    const std::vector<Monomial>& extra_rows)
{
    std::vector<SuperPoly> images;
    images.reserve(domain.size());
    std::vector<Monomial> rows = extra_rows;
    for (const Monomial& m : domain) {
        images.push_back(apply_delta(
            spec, SuperPoly::from_term(spec.registry, spec.ring, m, Scalar::one(spec.ring))));
        for (const auto& [mono, c] : images.back().terms())
            rows.push_back(mono);
    }
    std::sort(rows.begin(), rows.end(), MonoOrder{});
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    SparseMatrix out(spec.ring, rows, domain);
    auto row_index = [&](const Monomial& m) {
        auto it = std::lower_bound(rows.begin(), rows.end(), m, MonoOrder{});
        return static_cast<std::size_t>(it - rows.begin());
    };
    for (std::size_t j = 0; j < domain.size(); ++j)
        for (const auto& [mono, c] : images[j].terms())
            out.set(row_index(mono), j, c);
    return out;
}

SuperPoly component_of(const ComplexSpec& spec, const SuperPoly& f, StrandKey key, int degree)
{
    SuperPoly out = SuperPoly::zero(spec.registry, spec.ring);
    for (const auto& [m, c] : f.terms())
        if (strand_of(spec, m) == key && homological_degree(spec, m) == degree)
            out = out + SuperPoly::from_term(spec.registry, spec.ring, m, c);
    return out;
}

SuperPoly dual_generator(const ComplexSpec& spec)
{
    if (spec.kind != ComplexKind::dual_super_koszul)
        throw std::invalid_argument("dual generator lives in the dual complex");
    Monomial m = Monomial::unit(*spec.registry);
    for (std::size_t i = 0; i < spec.registry->odd_count(); ++i)
        m.odd_mask |= std::uint64_t{1} << i;
    return SuperPoly::from_term(spec.registry, spec.ring, m, Scalar::one(spec.ring));
}

std::vector<Scalar> coordinates(const ComplexSpec& spec, const StrandBasis& basis,
                                const SuperPoly& f)
{
    check_context(spec, f);
    std::vector<Scalar> coords(basis.dim(), Scalar::zero(spec.ring));
    for (const auto& [m, c] : f.terms())
        coords[basis.index_of(m)] = c;
    return coords;
}

} // namespace skoszul
