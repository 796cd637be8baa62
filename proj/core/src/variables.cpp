#include "skoszul/variables.hpp"

#include <stdexcept>

namespace skoszul {

void VarRegistry::add(Variable v)
{
    (v.parity == Parity::even ? evens_ : odds_).push_back(std::move(v));
}

std::shared_ptr<const VarRegistry> VarRegistry::super_koszul(int p, int q)
{
    auto reg = std::make_shared<VarRegistry>();
    for (int i = 1; i <= p; ++i)
        reg->add({"x" + std::to_string(i), Parity::even, Factor::r, i});
    for (int j = 1; j <= q; ++j)
        reg->add({"l" + std::to_string(j), Parity::even, Factor::pi, j});
    for (int j = 1; j <= q; ++j)
        reg->add({"th" + std::to_string(j), Parity::odd, Factor::r, j});
    for (int i = 1; i <= p; ++i)
        reg->add({"ch" + std::to_string(i), Parity::odd, Factor::pi, i});
    return reg;
}

std::shared_ptr<const VarRegistry> VarRegistry::dual_super_koszul(int p, int q)
{
    auto reg = std::make_shared<VarRegistry>();
    for (int i = 1; i <= p; ++i)
        reg->add({"x" + std::to_string(i), Parity::even, Factor::r, i});
    for (int j = 1; j <= q; ++j)
        reg->add({"dl" + std::to_string(j), Parity::even, Factor::pi_dual, j});
    for (int j = 1; j <= q; ++j)
        reg->add({"th" + std::to_string(j), Parity::odd, Factor::r, j});
    for (int i = 1; i <= p; ++i)
        reg->add({"dch" + std::to_string(i), Parity::odd, Factor::pi_dual, i});
    return reg;
}

std::shared_ptr<const VarRegistry> VarRegistry::classical(int n)
{
    auto reg = std::make_shared<VarRegistry>();
    for (int i = 1; i <= n; ++i)
        reg->add({"x" + std::to_string(i), Parity::even, Factor::classical_b, i});
    for (int i = 1; i <= n; ++i)
        reg->add({"y" + std::to_string(i), Parity::odd, Factor::classical_u, i});
    return reg;
}

std::optional<VarRef> VarRegistry::find(const std::string& name) const
{
    for (std::size_t i = 0; i < evens_.size(); ++i)
        if (evens_[i].name == name)
            return VarRef{Parity::even, i};
    for (std::size_t i = 0; i < odds_.size(); ++i)
        if (odds_[i].name == name)
            return VarRef{Parity::odd, i};
    return std::nullopt;
}

VarRef VarRegistry::ref(const std::string& name) const
{
    if (auto r = find(name))
        return *r;
    throw std::invalid_argument("unknown variable: " + name);
}

VarRef VarRegistry::ref(Factor f, Parity p, int index) const
{
    const auto& list = (p == Parity::even) ? evens_ : odds_;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].factor == f && list[i].index == index)
            return VarRef{p, i};
    throw std::invalid_argument("no variable with requested factor/parity/index");
}

bool VarRegistry::operator==(const VarRegistry& rhs) const
{
    auto same = [](const std::vector<Variable>& a, const std::vector<Variable>& b) {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].name != b[i].name || a[i].parity != b[i].parity ||
                a[i].factor != b[i].factor || a[i].index != b[i].index)
                return false;
        return true;
    };
    return same(evens_, rhs.evens_) && same(odds_, rhs.odds_);
}

} // namespace skoszul
