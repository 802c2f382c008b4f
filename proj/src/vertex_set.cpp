#include "cmlabel/vertex_set.hpp"

#include <algorithm>

namespace cmlabel {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_elem = true;
    for_each([&](int v) {
        if (!first_elem) out += ",";
        out += std::to_string(v);
        first_elem = false;
    });
    return out + "}";
}

bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

VertexSet permute(VertexSet s, const std::vector<int>& perm) {
    VertexSet out;
    s.for_each([&](int v) { out.insert(perm[v]); });
    return out;
}

}  // namespace cmlabel
