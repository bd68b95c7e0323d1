#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "patternforge/schema.hpp"
#include "patternforge/types.hpp"

namespace patternforge {

struct StoreFinding {
    enum class Code { DanglingSrc, DanglingDst, IndexInconsistency };
    Code code;
    std::string message;
};

struct StoreValidationReport {
    std::vector<StoreFinding> findings;
    bool ok() const { return findings.empty(); }
};

// Typed property multigraph. Vertices are keyed by ObjectId; edges are kept in
// insertion order and indexed three ways: by edge type, by (src, type) and by
// (dst, type). Endpoint existence is deliberately not checked on insert so
// fact files can be loaded in any order; `validate` reports dangling ends.
//
// Writes are single-threaded (load phase). All const members are safe to call
// from any number of threads once loading is done.
class GraphStore {
public:
    explicit GraphStore(GraphSchema schema = GraphSchema::standard());

    const GraphSchema& schema() const { return schema_; }

    // Throws DuplicateId / ArityMismatch.
    void add_vertex(const VertexRecord& v);
    // Throws ArityMismatch. Endpoints may be absent (see validate).
    void add_edge(const EdgeRecord& e);

    std::size_t vertex_count() const { return v_id_.size(); }
    std::size_t edge_count() const { return e_src_.size(); }

    // Record-level access paths (materialize copies; fine for tests and IO).
    std::vector<EdgeRecord> out_edges(ObjectId src, EdgeType t) const;
    std::vector<EdgeRecord> in_edges(ObjectId dst, EdgeType t) const;
    std::vector<VertexRecord> vertices_of_type(VertexType t) const;

    std::optional<VertexRecord> find_vertex_record(ObjectId id) const;

    // Slot-level access paths (no copies; the match engine's hot path).
    // Slots are dense indices in insertion order.
    std::optional<std::uint32_t> vertex_slot(ObjectId id) const;
    ObjectId vertex_id(std::uint32_t slot) const { return v_id_[slot]; }
    VertexType vertex_type(std::uint32_t slot) const { return v_type_[slot]; }
    std::span<const PropertyValue> vertex_props(std::uint32_t slot) const;
    std::span<const std::uint32_t> vertex_slots_of(VertexType t) const;

    ObjectId edge_src(std::uint32_t slot) const { return e_src_[slot]; }
    ObjectId edge_dst(std::uint32_t slot) const { return e_dst_[slot]; }
    EdgeType edge_type(std::uint32_t slot) const { return e_type_[slot]; }
    std::span<const PropertyValue> edge_props(std::uint32_t slot) const;
    std::span<const std::uint32_t> edge_slots_of(EdgeType t) const;
    std::span<const std::uint32_t> out_slots(ObjectId src, EdgeType t) const;
    std::span<const std::uint32_t> in_slots(ObjectId dst, EdgeType t) const;

    VertexRecord vertex_record(std::uint32_t slot) const;
    EdgeRecord edge_record(std::uint32_t slot) const;

    StoreValidationReport validate() const;

    // Order-independent 64-bit content digest: equal record multisets yield
    // equal digests regardless of insertion order. Empty store digests to
    // kEmptyDigest.
    std::uint64_t digest() const;
    static constexpr std::uint64_t kEmptyDigest = 0x9537e5e264c035bcULL;

private:
    using AdjacencyMap = std::unordered_map<ObjectId, std::vector<std::uint32_t>>;

    GraphSchema schema_;

    std::vector<ObjectId> v_id_;
    std::vector<VertexType> v_type_;
    std::vector<std::uint64_t> v_prop_ofs_;
    std::vector<PropertyValue> v_props_;
    std::unordered_map<ObjectId, std::uint32_t> v_index_;
    std::array<std::vector<std::uint32_t>, kVertexTypeCount> v_by_type_;

    std::vector<ObjectId> e_src_;
    std::vector<ObjectId> e_dst_;
    std::vector<EdgeType> e_type_;
    std::vector<std::uint64_t> e_prop_ofs_;
    std::vector<PropertyValue> e_props_;
    std::array<std::vector<std::uint32_t>, kEdgeTypeCount> e_by_type_;
    std::array<AdjacencyMap, kEdgeTypeCount> out_idx_;
    std::array<AdjacencyMap, kEdgeTypeCount> in_idx_;
};

} // namespace patternforge
