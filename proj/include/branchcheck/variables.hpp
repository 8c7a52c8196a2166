#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>

namespace branchcheck {

// The fixed variable universe, in canonical order.
enum class Var : unsigned char { x = 0, y = 1, u = 2, v = 3, t = 4 };

inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<char, kVarCount> kVarNames{'x', 'y', 'u', 'v', 't'};

inline constexpr std::size_t index_of(Var var) { return static_cast<std::size_t>(var); }
inline constexpr char name_of(Var var) { return kVarNames[index_of(var)]; }

inline std::optional<Var> var_from_char(char c) {
    for (std::size_t k = 0; k < kVarCount; ++k)
        if (kVarNames[k] == c) return static_cast<Var>(k);
    return std::nullopt;
}

// Small set of variables; restricts which names a parsed expression may use.
class VarSet {
  public:
    constexpr VarSet() = default;
    constexpr VarSet(std::initializer_list<Var> vars) {
        for (Var v : vars) insert(v);
    }
    constexpr void insert(Var v) { bits_ |= 1u << index_of(v); }
    constexpr bool contains(Var v) const { return (bits_ & (1u << index_of(v))) != 0; }

    static constexpr VarSet all() {
        return VarSet{Var::x, Var::y, Var::u, Var::v, Var::t};
    }

  private:
    unsigned bits_ = 0;
};

}  // namespace branchcheck
