#pragma once

#include <cstdint>
#include <string>

namespace cmlabel {

/// Coefficient field for homology and rank computations.
struct Field {
    enum class Kind { gf2, gfp, rational };

    Kind kind = Kind::gf2;
    std::uint32_t characteristic = 2;  // 0 for the rationals

    static constexpr Field gf2() { return {Kind::gf2, 2}; }
    static Field gfp(std::uint32_t p);
    static constexpr Field rational() { return {Kind::rational, 0}; }

    /// Signs of incidences matter in every characteristic except 2.
    constexpr bool needs_signs() const { return kind != Kind::gf2; }

    /// "gf2", "gf3", ..., "rational".
    std::string name() const;
    /// Inverse of name(); throws InvalidInput on unknown names or composite p.
    static Field parse(const std::string& name);

    friend bool operator==(const Field&, const Field&) = default;
};

}  // namespace cmlabel
