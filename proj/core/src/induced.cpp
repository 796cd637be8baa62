#include "skoszul/induced.hpp"

#include <map>

namespace skoszul {

SuperPoly DualSubstitution::image_of(VarRef v) const
{
    const Variable& var =
        v.parity == Parity::even ? spec.registry->even_var(v.pos) : spec.registry->odd_var(v.pos);
    std::size_t k = static_cast<std::size_t>(var.index - 1);
    if (var.factor == Factor::r)
        return var.parity == Parity::even ? x_image[k] : th_image[k];
    return var.parity == Parity::even ? dl_image[k] : dch_image[k];
}

SuperPoly DualSubstitution::apply(const SuperPoly& f) const
{
    SuperPoly out = SuperPoly::zero(spec.registry, spec.ring);
    for (const auto& [m, c] : f.terms()) {
        SuperPoly acc = SuperPoly::one(spec.registry, spec.ring);
        for (std::size_t i = 0; i < m.even_exp.size(); ++i)
            for (std::uint32_t e = 0; e < m.even_exp[i]; ++e)
                acc = acc * image_of(VarRef{Parity::even, i});
        // odd factors in ascending registry order, matching the normal form
        for (std::size_t i = 0; i < spec.registry->odd_count(); ++i)
            if (m.odd_mask & (std::uint64_t{1} << i))
                acc = acc * image_of(VarRef{Parity::odd, i});
        out = out + acc.scaled(c);
    }
    return out;
}

DualSubstitution dual_substitution(const SuperMatrix& m)
{
    const RingSpec& ring = m.ring();
    const int p = m.p(), q = m.q();
    DualSubstitution sub{ComplexSpec::dual_super_koszul(p, q, ring), {}, {}, {}, {}};
    const auto& reg = sub.spec.registry;

    auto var = [&](Factor f, Parity par, int index) {
        return SuperPoly::variable(reg, ring, reg->ref(f, par, index));
    };

    // x'_i = sum_h x_h a_hi + sum_k th_k c_ki; coefficients written on the
    // left, so the odd c entries pick up a sign when crossing th
    for (int i = 0; i < p; ++i) {
        SuperPoly img = SuperPoly::zero(reg, ring);
        for (int h = 0; h < p; ++h)
            img = img + var(Factor::r, Parity::even, h + 1).scaled(m.a(h, i));
        for (int k = 0; k < q; ++k)
            img = img - var(Factor::r, Parity::odd, k + 1).scaled(m.c(k, i));
        sub.x_image.push_back(std::move(img));
    }
    // th'_j = sum_h x_h b_hj + sum_k th_k d_kj
    for (int j = 0; j < q; ++j) {
        SuperPoly img = SuperPoly::zero(reg, ring);
        for (int h = 0; h < p; ++h)
            img = img + var(Factor::r, Parity::even, h + 1).scaled(m.b(h, j));
        for (int k = 0; k < q; ++k)
            img = img + var(Factor::r, Parity::odd, k + 1).scaled(m.d(k, j));
        sub.th_image.push_back(std::move(img));
    }
    // dual variables transform by the rows of M^-1; this is the unique
    // assignment keeping sum x_i dch_i + sum th_j dl_j invariant
    SuperMatrix inv = m.inverse();
    for (int i = 0; i < p; ++i) {
        SuperPoly img = SuperPoly::zero(reg, ring);
        for (int g = 0; g < p; ++g)
            img = img + var(Factor::pi_dual, Parity::odd, g + 1).scaled(inv.a(i, g));
        for (int j = 0; j < q; ++j)
            img = img + var(Factor::pi_dual, Parity::even, j + 1).scaled(inv.b(i, j));
        sub.dch_image.push_back(std::move(img));
    }
    for (int k = 0; k < q; ++k) {
        SuperPoly img = SuperPoly::zero(reg, ring);
        for (int g = 0; g < p; ++g)
            img = img + var(Factor::pi_dual, Parity::odd, g + 1).scaled(inv.c(k, g));
        for (int j = 0; j < q; ++j)
            img = img + var(Factor::pi_dual, Parity::even, j + 1).scaled(inv.d(k, j));
        sub.dl_image.push_back(std::move(img));
    }
    return sub;
}

InducedActionResult induced_action_on_generator(const SuperMatrix& m, bool verify_side_strands)
{
    DualSubstitution sub = dual_substitution(m);
    const ComplexSpec& spec = sub.spec;
    const int p = m.p(), q = m.q();

    SuperPoly gen = dual_generator(spec);
    SuperPoly image = sub.apply(gen);

    StrandKey home{-p, q};
    const int degree = p;

    SuperPoly main_part = component_of(spec, image, home, degree);
    StrandBasis ambient = enumerate_strand(spec, home, degree);
    SparseMatrix boundary =
        differential_matrix_on(spec, enumerate_strand(spec, home, degree - 1).monomials,
                               ambient.monomials);
    Scalar coeff = class_coefficient(main_part, gen, boundary);

    if (verify_side_strands) {
        // every other component of the image must be a boundary
        std::map<std::pair<StrandKey, int>, SuperPoly> parts;
        for (const auto& [mono, c] : image.terms()) {
            StrandKey key = strand_of(spec, mono);
            int deg = homological_degree(spec, mono);
            if (key == home && deg == degree)
                continue;
            auto it = parts.find({key, deg});
            if (it == parts.end())
                it = parts.emplace(std::make_pair(key, deg), SuperPoly::zero(spec.registry, spec.ring))
                         .first;
            it->second =
                it->second + SuperPoly::from_term(spec.registry, spec.ring, mono, c);
        }
        for (const auto& [loc, part] : parts) {
            SparseMatrix side = differential_matrix_on(
                spec, enumerate_strand(spec, loc.first, loc.second - 1).monomials,
                enumerate_strand(spec, loc.first, loc.second).monomials);
            if (!in_image(part, side))
                throw std::logic_error("side-strand component of the transformed generator "
                                       "is not a boundary");
        }
    }

    InducedActionResult out{coeff, coeff.inverse(), ber(m), Scalar::zero(m.ring()), false,
                            std::move(image)};
    out.berezinian_inverse = out.berezinian.inverse();
    out.matches_inverse_ber = (out.coefficient == out.berezinian_inverse);
    return out;
}

} // namespace skoszul
