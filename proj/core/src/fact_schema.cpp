#include "patternforge/fact_schema.hpp"

namespace patternforge {

const FactPredicate* FactSchema::find(std::string_view name) const {
    for (const auto& p : predicates)
        if (p.name == name) return &p;
    return nullptr;
}

const FactPredicate* FactSchema::find(VertexType t) const {
    for (const auto& p : predicates)
        if (p.is_vertex && p.vtype == t) return &p;
    return nullptr;
}

const FactPredicate* FactSchema::find(EdgeType t) const {
    for (const auto& p : predicates)
        if (!p.is_vertex && p.etype == t) return &p;
    return nullptr;
}

GraphSchema FactSchema::graph_schema() const {
    GraphSchema s;
    for (const auto& p : predicates) {
        if (p.is_vertex)
            s.vertex_prop_arity[index_of(p.vtype)] = p.prop_pos.size();
        else
            s.edge_prop_arity[index_of(p.etype)] = p.prop_pos.size();
    }
    return s;
}

namespace {

FactPredicate vertex_pred(std::string name, VertexType t, std::size_t arity, std::size_t id_pos,
                          std::vector<std::size_t> prop_pos) {
    FactPredicate p;
    p.name = std::move(name);
    p.is_vertex = true;
    p.vtype = t;
    p.arity = arity;
    p.id_pos = id_pos;
    p.prop_pos = std::move(prop_pos);
    return p;
}

FactPredicate edge_pred(std::string name, EdgeType t, std::size_t arity,
                        std::vector<std::size_t> prop_pos) {
    FactPredicate p;
    p.name = std::move(name);
    p.is_vertex = false;
    p.etype = t;
    p.arity = arity;
    p.src_pos = 0;
    p.dst_pos = 1;
    p.prop_pos = std::move(prop_pos);
    return p;
}

} // namespace

const FactSchema& FactSchema::standard() {
    static const FactSchema schema = [] {
        FactSchema s;
        s.predicates = {
            vertex_pred("vertex1", VertexType::V1, 1, 0, {}),
            vertex_pred("vertex2", VertexType::V2, 3, 0, {1, 2}),
            vertex_pred("vertex3", VertexType::V3, 1, 0, {}),
            vertex_pred("vertex4", VertexType::V4, 3, 1, {0, 2}),
            vertex_pred("vertex5", VertexType::V5, 1, 0, {}),
            edge_pred("edgeA", EdgeType::A, 3, {2}),
            edge_pred("edgeB", EdgeType::B, 2, {}),
            edge_pred("edgeC", EdgeType::C, 2, {}),
            edge_pred("edgeD", EdgeType::D, 3, {2}),
            edge_pred("edgeE", EdgeType::E, 2, {}),
            edge_pred("edgeF", EdgeType::F, 2, {}),
        };
        return s;
    }();
    return schema;
}

} // namespace patternforge
