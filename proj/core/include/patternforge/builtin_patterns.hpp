#pragma once

#include "patternforge/pattern.hpp"

namespace patternforge {

// The built-in fixed-shape root query ("agile-lite"). Six subpatterns named
// sub1..sub6, projection X of type V1. The property value 1 is the star
// marker: starred edges and key vertices carry it.
const Pattern& builtin_agile_lite();

// DSL source the built-in is parsed from.
std::string_view agile_lite_source();

} // namespace patternforge
