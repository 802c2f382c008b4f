#include "cmlabel/field.hpp"

#include <charconv>

#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::gfp(std::uint32_t p) {
    if (!is_prime(p)) throw InvalidInput("GF(p) requires a prime, got " + std::to_string(p));
    // Keep products of two residues inside int64.
    if (p > (1u << 31)) throw InvalidInput("GF(p) characteristic too large");
    if (p == 2) return gf2();
    return {Kind::gfp, p};
}

std::string Field::name() const {
    switch (kind) {
        case Kind::gf2: return "gf2";
        case Kind::gfp: return "gf" + std::to_string(characteristic);
        case Kind::rational: return "rational";
    }
    return "?";
}

Field Field::parse(const std::string& name) {
    if (name == "gf2") return gf2();
    if (name == "rational" || name == "q" || name == "Q") return rational();
    if (name.size() > 2 && name.rfind("gf", 0) == 0) {
        std::uint32_t p = 0;
        const char* first = name.data() + 2;
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec == std::errc() && ptr == last) return gfp(p);
    }
    throw InvalidInput("unknown coefficient field '" + name + "' (expected gf2, gfP or rational)");
}

}  // namespace cmlabel
