#include "skoszul/homology.hpp"

#include <algorithm>
#include <map>

namespace skoszul {
namespace {

/// Sparse field coordinates of one Grassmann-mask component of f over a row
/// label list.
SpVec mask_component(const SuperPoly& f, std::uint32_t mask, const std::vector<Monomial>& rows)
{
    SpVec out;
    for (const auto& [m, c] : f.terms()) {
        FieldElem v = c.coefficient(mask);
        if (v.is_zero())
            continue;
        auto it = std::lower_bound(rows.begin(), rows.end(), m, MonoOrder{});
        if (it == rows.end() || !(*it == m))
            throw NoSolutionError("cycle monomial " + m.str(*f.registry()) +
                                  " outside the boundary's row space");
        out.emplace_back(static_cast<std::size_t>(it - rows.begin()), v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::uint32_t> masks_of(const SuperPoly& f)
{
    std::vector<std::uint32_t> masks;
    for (const auto& [m, c] : f.terms())
        for (const auto& [mask, v] : c.terms())
            masks.push_back(mask);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

SuperPoly from_coordinates(const ComplexSpec& spec, const StrandBasis& basis,
                           const std::vector<FieldElem>& coords)
{
    SuperPoly f = SuperPoly::zero(spec.registry, spec.ring);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            f = f + SuperPoly::from_term(spec.registry, spec.ring, basis.monomials[i],
                                         Scalar::from_field(spec.ring, coords[i]));
    return f;
}

} // namespace

StrandHomology homology_of_strand(const ComplexSpec& spec, StrandKey key)
{
    StrandHomology out;
    auto [lo, hi] = strand_degree_range(spec, key);
    if (hi < lo)
        return out;

    const int shift = spec.delta_shift();
    std::map<int, StrandBasis> bases;
    for (int i = lo - 1; i <= hi + 1; ++i)
        bases.emplace(i, enumerate_strand(spec, key, i));
    // outgoing differential per degree
    std::map<int, SparseMatrix> delta;
    std::map<int, RankKernel> rk;
    for (int i = lo; i <= hi; ++i) {
        if (bases.at(i).dim() == 0)
            continue;
        delta.emplace(i, differential_matrix(spec, key, i));
    }
    // d^2 = 0 before any rank is trusted
    for (auto& [i, m] : delta) {
        auto next = delta.find(i + shift);
        if (next != delta.end() && !(next->second * m).is_zero())
            throw std::logic_error("differential does not square to zero on strand");
    }
    for (auto& [i, m] : delta)
        rk.emplace(i, rank_and_kernel(m));

    for (int i = lo; i <= hi; ++i) {
        const StrandBasis& basis = bases.at(i);
        if (basis.dim() == 0)
            continue;
        StrandHomologyRow row;
        row.key = key;
        row.degree = i;
        row.dim = basis.dim();
        auto out_it = rk.find(i);
        std::size_t out_rank = out_it == rk.end() ? 0 : out_it->second.rank;
        auto in_it = rk.find(i - shift);
        row.rank_out = out_rank;
        row.rank_in = in_it == rk.end() ? 0 : in_it->second.rank;
        std::size_t ker = basis.dim() - out_rank;
        row.h_dim = ker - row.rank_in;
        out.rows.push_back(row);

        if (row.h_dim == 0)
            continue;
        // generators: kernel vectors reduced modulo the incoming image
        ColumnSpace space(spec.ring.field, basis.dim());
        if (in_it != rk.end()) {
            const SparseMatrix& incoming = delta.at(i - shift);
            for (std::size_t j = 0; j < incoming.cols(); ++j) {
                SpVec col;
                for (const auto& [r, v] : incoming.column(j))
                    col.emplace_back(r, v.field_value());
                space.add(std::move(col));
            }
        }
        std::vector<std::vector<FieldElem>> kernel;
        if (out_it != rk.end()) {
            kernel = out_it->second.kernel;
        } else {
            // no outgoing map: the whole component is cycles
            for (std::size_t j = 0; j < basis.dim(); ++j) {
                std::vector<FieldElem> e(basis.dim(), FieldElem::zero(spec.ring.field));
                e[j] = FieldElem::one(spec.ring.field);
                kernel.push_back(std::move(e));
            }
        }
        for (const auto& kv : kernel) {
            SpVec v;
            for (std::size_t r = 0; r < kv.size(); ++r)
                if (!kv[r].is_zero())
                    v.emplace_back(r, kv[r]);
            SpVec residue = space.reduce(v);
            if (residue.empty())
                continue;
            space.add(residue);
            // normalize: leading coefficient (highest term) 1
            FieldElem inv = residue.back().second.inverse();
            std::vector<FieldElem> coords(basis.dim(), FieldElem::zero(spec.ring.field));
            for (const auto& [r, val] : residue)
                coords[r] = val * inv;
            out.classes.push_back(HomologyClass{key, i, from_coordinates(spec, basis, coords),
                                                basis.monomials[residue.back().first].parity()});
        }
    }
    return out;
}

Scalar class_coefficient(const SuperPoly& cycle, const SuperPoly& generator,
                         const SparseMatrix& boundary)
{
    check_same_context(cycle, generator);
    const RingSpec& ring = cycle.ring();
    const FieldSpec& field = ring.field;
    const std::vector<Monomial>& rows = boundary.row_labels();

    ColumnSpace space(field, rows.size());
    for (std::size_t j = 0; j < boundary.cols(); ++j) {
        SpVec col;
        for (const auto& [r, v] : boundary.column(j))
            col.emplace_back(r, v.field_value());
        space.add(std::move(col));
    }

    SpVec gen_res = space.reduce(mask_component(generator, 0, rows));
    if (gen_res.empty())
        throw NonInvertibleError("generator lies in the boundary image");

    Scalar coeff = Scalar::zero(ring);
    for (std::uint32_t mask : masks_of(cycle)) {
        SpVec res = space.reduce(mask_component(cycle, mask, rows));
        if (res.empty())
            continue;
        // res must be proportional to gen_res
        FieldElem c = sp_at(res, gen_res.front().first, field) / gen_res.front().second;
        SpVec remainder = sp_axpy(res, -c, gen_res);
        if (!remainder.empty())
            throw NoSolutionError("cycle is not in span(generator) + image");
        coeff = coeff + Scalar::term(ring, mask, c);
    }
    return coeff;
}

bool in_image(const SuperPoly& cycle, const SparseMatrix& boundary)
{
    const FieldSpec& field = cycle.ring().field;
    const std::vector<Monomial>& rows = boundary.row_labels();
    ColumnSpace space(field, rows.size());
    for (std::size_t j = 0; j < boundary.cols(); ++j) {
        SpVec col;
        for (const auto& [r, v] : boundary.column(j))
            col.emplace_back(r, v.field_value());
        space.add(std::move(col));
    }
    for (std::uint32_t mask : masks_of(cycle)) {
        if (!space.contains(mask_component(cycle, mask, rows)))
            return false;
    }
    return true;
}

} // namespace skoszul
