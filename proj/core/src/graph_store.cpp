#include "patternforge/graph_store.hpp"

#include <algorithm>

#include "patternforge/errors.hpp"
#include "patternforge/rng.hpp"

namespace patternforge {

namespace {

constexpr std::string_view kVertexNames[kVertexTypeCount] = {"V1", "V2", "V3", "V4", "V5"};
constexpr std::string_view kEdgeNames[kEdgeTypeCount] = {"A", "B", "C", "D", "E", "F"};

} // namespace

std::string_view to_string(VertexType t) { return kVertexNames[index_of(t)]; }
std::string_view to_string(EdgeType t) { return kEdgeNames[index_of(t)]; }

std::optional<VertexType> vertex_type_from(std::string_view name) {
    for (std::size_t i = 0; i < kVertexTypeCount; ++i)
        if (name == kVertexNames[i]) return static_cast<VertexType>(i);
    return std::nullopt;
}

std::optional<EdgeType> edge_type_from(std::string_view name) {
    for (std::size_t i = 0; i < kEdgeTypeCount; ++i)
        if (name == kEdgeNames[i]) return static_cast<EdgeType>(i);
    return std::nullopt;
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::UnknownTypeName: return "UnknownTypeName";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ConfigTooSmall: return "ConfigTooSmall";
    case ErrorCode::UnknownClause: return "UnknownClause";
    case ErrorCode::ZeroDuration: return "ZeroDuration";
    case ErrorCode::ZeroInferences: return "ZeroInferences";
    case ErrorCode::ZeroEdges: return "ZeroEdges";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

GraphStore::GraphStore(GraphSchema schema) : schema_(schema) {}

void GraphStore::add_vertex(const VertexRecord& v) {
    if (v_index_.contains(v.id))
        throw Error(ErrorCode::DuplicateId,
                    "vertex id " + std::to_string(v.id) + " already present");
    if (v.props.size() != schema_.arity(v.vtype))
        throw Error(ErrorCode::ArityMismatch,
                    "vertex type " + std::string(to_string(v.vtype)) + " expects " +
                        std::to_string(schema_.arity(v.vtype)) + " properties, got " +
                        std::to_string(v.props.size()));
    const auto slot = static_cast<std::uint32_t>(v_id_.size());
    v_id_.push_back(v.id);
    v_type_.push_back(v.vtype);
    v_prop_ofs_.push_back(v_props_.size());
    v_props_.insert(v_props_.end(), v.props.begin(), v.props.end());
    v_index_.emplace(v.id, slot);
    v_by_type_[index_of(v.vtype)].push_back(slot);
}

void GraphStore::add_edge(const EdgeRecord& e) {
    if (e.props.size() != schema_.arity(e.etype))
        throw Error(ErrorCode::ArityMismatch,
                    "edge type " + std::string(to_string(e.etype)) + " expects " +
                        std::to_string(schema_.arity(e.etype)) + " properties, got " +
                        std::to_string(e.props.size()));
    const auto slot = static_cast<std::uint32_t>(e_src_.size());
    e_src_.push_back(e.src);
    e_dst_.push_back(e.dst);
    e_type_.push_back(e.etype);
    e_prop_ofs_.push_back(e_props_.size());
    e_props_.insert(e_props_.end(), e.props.begin(), e.props.end());
    e_by_type_[index_of(e.etype)].push_back(slot);
    out_idx_[index_of(e.etype)][e.src].push_back(slot);
    in_idx_[index_of(e.etype)][e.dst].push_back(slot);
}

std::span<const PropertyValue> GraphStore::vertex_props(std::uint32_t slot) const {
    const auto begin = v_prop_ofs_[slot];
    const auto end = slot + 1 < v_prop_ofs_.size() ? v_prop_ofs_[slot + 1] : v_props_.size();
    return {v_props_.data() + begin, end - begin};
}

std::span<const PropertyValue> GraphStore::edge_props(std::uint32_t slot) const {
    const auto begin = e_prop_ofs_[slot];
    const auto end = slot + 1 < e_prop_ofs_.size() ? e_prop_ofs_[slot + 1] : e_props_.size();
    return {e_props_.data() + begin, end - begin};
}

std::optional<std::uint32_t> GraphStore::vertex_slot(ObjectId id) const {
    auto it = v_index_.find(id);
    if (it == v_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::uint32_t> GraphStore::vertex_slots_of(VertexType t) const {
    return v_by_type_[index_of(t)];
}

std::span<const std::uint32_t> GraphStore::edge_slots_of(EdgeType t) const {
    return e_by_type_[index_of(t)];
}

std::span<const std::uint32_t> GraphStore::out_slots(ObjectId src, EdgeType t) const {
    const auto& m = out_idx_[index_of(t)];
    auto it = m.find(src);
    if (it == m.end()) return {};
    return it->second;
}

std::span<const std::uint32_t> GraphStore::in_slots(ObjectId dst, EdgeType t) const {
    const auto& m = in_idx_[index_of(t)];
    auto it = m.find(dst);
    if (it == m.end()) return {};
    return it->second;
}

VertexRecord GraphStore::vertex_record(std::uint32_t slot) const {
    auto props = vertex_props(slot);
    return VertexRecord{v_id_[slot], v_type_[slot], {props.begin(), props.end()}};
}

EdgeRecord GraphStore::edge_record(std::uint32_t slot) const {
    auto props = edge_props(slot);
    return EdgeRecord{e_src_[slot], e_dst_[slot], e_type_[slot], {props.begin(), props.end()}};
}

std::vector<EdgeRecord> GraphStore::out_edges(ObjectId src, EdgeType t) const {
    std::vector<EdgeRecord> result;
    for (auto slot : out_slots(src, t)) result.push_back(edge_record(slot));
    return result;
}

std::vector<EdgeRecord> GraphStore::in_edges(ObjectId dst, EdgeType t) const {
    std::vector<EdgeRecord> result;
    for (auto slot : in_slots(dst, t)) result.push_back(edge_record(slot));
    return result;
}

std::vector<VertexRecord> GraphStore::vertices_of_type(VertexType t) const {
    std::vector<VertexRecord> result;
    for (auto slot : vertex_slots_of(t)) result.push_back(vertex_record(slot));
    return result;
}

std::optional<VertexRecord> GraphStore::find_vertex_record(ObjectId id) const {
    auto slot = vertex_slot(id);
    if (!slot) return std::nullopt;
    return vertex_record(*slot);
}

StoreValidationReport GraphStore::validate() const {
    StoreValidationReport report;
    for (std::uint32_t slot = 0; slot < e_src_.size(); ++slot) {
        if (!v_index_.contains(e_src_[slot]))
            report.findings.push_back({StoreFinding::Code::DanglingSrc,
                                       "edge " + std::to_string(slot) + " src " +
                                           std::to_string(e_src_[slot]) + " is not a vertex"});
        if (!v_index_.contains(e_dst_[slot]))
            report.findings.push_back({StoreFinding::Code::DanglingDst,
                                       "edge " + std::to_string(slot) + " dst " +
                                           std::to_string(e_dst_[slot]) + " is not a vertex"});
    }
    std::size_t out_total = 0;
    std::size_t in_total = 0;
    for (std::size_t t = 0; t < kEdgeTypeCount; ++t) {
        for (const auto& [id, slots] : out_idx_[t]) out_total += slots.size();
        for (const auto& [id, slots] : in_idx_[t]) in_total += slots.size();
    }
    if (out_total != edge_count() || in_total != edge_count())
        report.findings.push_back(
            {StoreFinding::Code::IndexInconsistency,
             "index cardinality " + std::to_string(out_total) + "+" + std::to_string(in_total) +
                 " does not match 2x" + std::to_string(edge_count())});
    std::size_t typed = 0;
    for (const auto& slots : v_by_type_) typed += slots.size();
    if (typed != vertex_count())
        report.findings.push_back({StoreFinding::Code::IndexInconsistency,
                                   "type index covers " + std::to_string(typed) + " of " +
                                       std::to_string(vertex_count()) + " vertices"});
    return report;
}

std::uint64_t GraphStore::digest() const {
    std::uint64_t v_sum = 0;
    std::uint64_t v_xor = 0;
    for (std::uint32_t slot = 0; slot < v_id_.size(); ++slot) {
        std::uint64_t h = mix64(0x76u ^ (static_cast<std::uint64_t>(v_type_[slot]) << 8));
        h = mix64(h ^ v_id_[slot]);
        for (auto p : vertex_props(slot)) h = mix64(h ^ static_cast<std::uint64_t>(p));
        v_sum += h;
        v_xor ^= h;
    }
    std::uint64_t e_sum = 0;
    std::uint64_t e_xor = 0;
    for (std::uint32_t slot = 0; slot < e_src_.size(); ++slot) {
        std::uint64_t h = mix64(0x65u ^ (static_cast<std::uint64_t>(e_type_[slot]) << 8));
        h = mix64(h ^ e_src_[slot]);
        h = mix64(h ^ e_dst_[slot]);
        for (auto p : edge_props(slot)) h = mix64(h ^ static_cast<std::uint64_t>(p));
        e_sum += h;
        e_xor ^= h;
    }
    std::uint64_t d = mix64(vertex_count());
    d = mix64(d ^ edge_count());
    d = mix64(d ^ v_sum);
    d = mix64(d ^ v_xor);
    d = mix64(d ^ e_sum);
    d = mix64(d ^ e_xor);
    return d;
}

} // namespace patternforge
