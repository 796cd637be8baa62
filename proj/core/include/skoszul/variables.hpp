#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skoszul/scalar.hpp"

namespace skoszul {

/// Which tensor factor a variable belongs to. `r` is Sym(V) (x, theta),
/// `pi` is Sym(PiV) (l, ch), `pi_dual` is Sym(PiV*) (dl, dch); the classical
/// complex uses its own two factors (x and y).
enum class Factor : unsigned char { r, pi, pi_dual, classical_b, classical_u };

struct Variable {
    std::string name;
    Parity parity;
    Factor factor;
    int index; // 1-based within (factor, parity) family
};

/// Position of a variable: its parity class plus the index into the
/// registry's even or odd list.
struct VarRef {
    Parity parity;
    std::size_t pos;
    friend bool operator==(const VarRef&, const VarRef&) = default;
};

/// Ordered variable alphabet of one complex. Even variables carry exponents,
/// odd variables occupy bits of a mask in this registry's order.
class VarRegistry {
public:
    /// x1..xp, l1..lq (even) | th1..thq, ch1..chp (odd)
    static std::shared_ptr<const VarRegistry> super_koszul(int p, int q);
    /// x1..xp, dl1..dlq (even) | th1..thq, dch1..dchp (odd)
    static std::shared_ptr<const VarRegistry> dual_super_koszul(int p, int q);
    /// x1..xN (even) | y1..yN (odd)
    static std::shared_ptr<const VarRegistry> classical(int n);

    std::size_t even_count() const { return evens_.size(); }
    std::size_t odd_count() const { return odds_.size(); }
    const Variable& even_var(std::size_t pos) const { return evens_[pos]; }
    const Variable& odd_var(std::size_t pos) const { return odds_[pos]; }
    const std::vector<Variable>& evens() const { return evens_; }
    const std::vector<Variable>& odds() const { return odds_; }

    std::optional<VarRef> find(const std::string& name) const;
    VarRef ref(const std::string& name) const;
    /// Position of the index-th variable (1-based) of a (factor, parity) family.
    VarRef ref(Factor f, Parity p, int index) const;

    bool operator==(const VarRegistry& rhs) const;

private:
    std::vector<Variable> evens_;
    std::vector<Variable> odds_;

    void add(Variable v);
};

} // namespace skoszul
