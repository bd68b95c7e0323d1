#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace patternforge {

// Identifiers are opaque 64-bit values; properties are signed 64-bit and
// totally ordered. Every value seen in a fact file is one of the two.
using ObjectId = std::uint64_t;
using PropertyValue = std::int64_t;

enum class VertexType : std::uint8_t { V1 = 0, V2, V3, V4, V5 };
enum class EdgeType : std::uint8_t { A = 0, B, C, D, E, F };

inline constexpr std::size_t kVertexTypeCount = 5;
inline constexpr std::size_t kEdgeTypeCount = 6;

constexpr std::size_t index_of(VertexType t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(EdgeType t) { return static_cast<std::size_t>(t); }

std::string_view to_string(VertexType t);
std::string_view to_string(EdgeType t);
std::optional<VertexType> vertex_type_from(std::string_view name);
std::optional<EdgeType> edge_type_from(std::string_view name);

struct VertexRecord {
    ObjectId id = 0;
    VertexType vtype = VertexType::V1;
    std::vector<PropertyValue> props;

    bool operator==(const VertexRecord&) const = default;
};

struct EdgeRecord {
    ObjectId src = 0;
    ObjectId dst = 0;
    EdgeType etype = EdgeType::A;
    std::vector<PropertyValue> props;

    bool operator==(const EdgeRecord&) const = default;
};

} // namespace patternforge
