#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "patternforge/schema.hpp"
#include "patternforge/types.hpp"

namespace patternforge {

// Maps fact-file predicate names onto typed records. Each predicate names
// one vertex or edge type and says which argument positions carry the id
// (or src/dst) and which carry properties, in property order.
struct FactPredicate {
    std::string name;
    bool is_vertex = true;
    VertexType vtype = VertexType::V1;
    EdgeType etype = EdgeType::A;
    std::size_t arity = 1;
    std::size_t id_pos = 0;  // vertex id position
    std::size_t src_pos = 0; // edge endpoints
    std::size_t dst_pos = 1;
    std::vector<std::size_t> prop_pos; // property positions, in property order
};

struct FactSchema {
    std::vector<FactPredicate> predicates;

    const FactPredicate* find(std::string_view name) const;
    const FactPredicate* find(VertexType t) const;
    const FactPredicate* find(EdgeType t) const;

    GraphSchema graph_schema() const;

    // vertex1(Id); vertex2(Id,Starred,Key); vertex3(Id); vertex4(P0,Id,P2);
    // vertex5(Id); edgeA(Src,Dst,P); edgeB(Src,Dst); edgeC(Src,Dst);
    // edgeD(Src,Dst,P); edgeE(Src,Dst); edgeF(Src,Dst).
    static const FactSchema& standard();
};

} // namespace patternforge
