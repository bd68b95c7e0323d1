#pragma once

#include <array>
#include <cstddef>

#include "patternforge/types.hpp"

namespace patternforge {

// Per-type property arities. Arity is data, not code: stores and patterns are
// checked against whatever schema the store was constructed with.
struct GraphSchema {
    std::array<std::size_t, kVertexTypeCount> vertex_prop_arity{};
    std::array<std::size_t, kEdgeTypeCount> edge_prop_arity{};

    std::size_t arity(VertexType t) const { return vertex_prop_arity[index_of(t)]; }
    std::size_t arity(EdgeType t) const { return edge_prop_arity[index_of(t)]; }

    // V1/V3/V5 carry no extra properties; V2 carries (starred, key); V4
    // carries (p0, p2). A and D edges carry one property each.
    static GraphSchema standard() {
        GraphSchema s;
        s.vertex_prop_arity = {0, 2, 0, 2, 0};
        s.edge_prop_arity = {1, 0, 0, 1, 0, 0};
        return s;
    }

    bool operator==(const GraphSchema&) const = default;
};

} // namespace patternforge
