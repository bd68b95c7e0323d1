#pragma once

// Internal: patterns compiled to flat step lists over variable slots. With a
// fixed atom order every variable's first occurrence is static, so argument
// modes (bind vs check) and access paths are decided at compile time and the
// runtime binding is a plain value array with no bound flags.

#include <cstdint>
#include <string>
#include <vector>

#include "patternforge/graph_store.hpp"
#include "patternforge/match.hpp"
#include "patternforge/pattern.hpp"

namespace patternforge::detail {

struct ArgMode {
    enum class K : std::uint8_t { Bind, Check, ConstId, ConstProp, Wildcard };
    K k = K::Wildcard;
    std::uint32_t slot = 0;
    std::uint64_t value = 0;
};

struct Step {
    enum class Kind : std::uint8_t { Vertex, Edge, Constraint };
    enum class Access : std::uint8_t { IdLookup, TypeScan, OutIndex, InIndex, EdgeScan, None };

    Kind kind = Kind::Vertex;
    Access access = Access::None;
    VertexType vtype = VertexType::V1;
    EdgeType etype = EdgeType::A;
    ConstraintKind ckind = ConstraintKind::Eq;
    ArgMode id;
    ArgMode src;
    ArgMode dst;
    std::vector<ArgMode> props;
    std::vector<ArgMode> cargs;
    std::uint32_t subpattern = 0;
};

struct VarTable {
    std::vector<std::string> names;
    std::vector<BoundValue::Kind> kinds;

    std::uint32_t slot_of(const std::string& name) const;
};

struct CompiledPattern {
    VarTable vars;
    std::vector<Step> steps;
    std::uint32_t projection_slot = 0;
};

// One subpattern compiled standalone: variables bound by earlier subpatterns
// start free here (that is the re-enumeration the subpattern strategy pays).
// Constraints whose variables never bind in-sub are listed in `deferred` and
// must be applied at join time.
struct CompiledSubpattern {
    std::vector<Step> steps;
    std::vector<std::uint32_t> local_vars;       // global slots bound in-sub, in bind order
    std::vector<ConstraintAtom> deferred;
};

struct CompiledQuery {
    VarTable vars;
    std::uint32_t projection_slot = 0;
    std::vector<CompiledSubpattern> subs;
};

// Builds the shared variable table (slots by first occurrence over the whole
// pattern, constraint occurrences included).
VarTable build_var_table(const Pattern& p);

// Throws InvalidPattern if validate_pattern(p, g.schema()) reports findings.
void require_valid(const Pattern& p, const GraphSchema& schema);

CompiledPattern compile_unified(const Pattern& p, const GraphSchema& schema);
CompiledQuery compile_per_subpattern(const Pattern& p, const GraphSchema& schema);

bool eval_constraint(const GraphStore& g, ConstraintKind kind, const BoundValue& a,
                     const BoundValue& b);

// The red relation dereferences this property index on both vertices.
inline constexpr std::size_t kRedKeyPropIndex = 1;

inline std::uint64_t arg_value(const ArgMode& m, const std::vector<std::uint64_t>& binding) {
    switch (m.k) {
    case ArgMode::K::Check: return binding[m.slot];
    case ArgMode::K::ConstId:
    case ArgMode::K::ConstProp: return m.value;
    default: return 0;
    }
}

// Depth-first evaluation of `steps` starting at `index`. Calls `on_solution`
// once per complete assignment. The binding array is reused; slots a step
// binds are simply overwritten by the next candidate.
template <class F>
void run_steps(const GraphStore& g, const std::vector<Step>& steps, std::size_t index,
               std::vector<std::uint64_t>& binding, MatchStats& stats, F&& on_solution) {
    if (index == steps.size()) {
        on_solution();
        return;
    }
    const Step& s = steps[index];
    std::uint64_t successes = 0;

    auto unify_arg = [&](const ArgMode& m, std::uint64_t fact_value) -> bool {
        switch (m.k) {
        case ArgMode::K::Bind: binding[m.slot] = fact_value; return true;
        case ArgMode::K::Check: return binding[m.slot] == fact_value;
        case ArgMode::K::ConstId:
        case ArgMode::K::ConstProp: return m.value == fact_value;
        case ArgMode::K::Wildcard: return true;
        }
        return false;
    };

    auto try_vertex = [&](std::uint32_t slot) {
        if (g.vertex_type(slot) != s.vtype) return;
        if (!unify_arg(s.id, g.vertex_id(slot))) return;
        auto props = g.vertex_props(slot);
        if (props.size() != s.props.size()) return;
        for (std::size_t i = 0; i < props.size(); ++i)
            if (!unify_arg(s.props[i], static_cast<std::uint64_t>(props[i]))) return;
        ++stats.atom_matches;
        ++successes;
        run_steps(g, steps, index + 1, binding, stats, on_solution);
    };

    auto try_edge = [&](std::uint32_t slot) {
        if (!unify_arg(s.src, g.edge_src(slot))) return;
        if (!unify_arg(s.dst, g.edge_dst(slot))) return;
        auto props = g.edge_props(slot);
        if (props.size() != s.props.size()) return;
        for (std::size_t i = 0; i < props.size(); ++i)
            if (!unify_arg(s.props[i], static_cast<std::uint64_t>(props[i]))) return;
        ++stats.atom_matches;
        ++successes;
        run_steps(g, steps, index + 1, binding, stats, on_solution);
    };

    switch (s.kind) {
    case Step::Kind::Vertex:
        if (s.access == Step::Access::IdLookup) {
            if (auto slot = g.vertex_slot(arg_value(s.id, binding))) try_vertex(*slot);
        } else {
            for (auto slot : g.vertex_slots_of(s.vtype)) try_vertex(slot);
        }
        break;
    case Step::Kind::Edge:
        switch (s.access) {
        case Step::Access::OutIndex:
            for (auto slot : g.out_slots(arg_value(s.src, binding), s.etype)) try_edge(slot);
            break;
        case Step::Access::InIndex:
            for (auto slot : g.in_slots(arg_value(s.dst, binding), s.etype)) try_edge(slot);
            break;
        default:
            for (auto slot : g.edge_slots_of(s.etype)) try_edge(slot);
            break;
        }
        break;
    case Step::Kind::Constraint: {
        BoundValue a{s.cargs[0].k == ArgMode::K::ConstId ? BoundValue::Kind::Id
                                                         : BoundValue::Kind::Prop,
                     arg_value(s.cargs[0], binding)};
        BoundValue b{s.cargs[1].k == ArgMode::K::ConstId ? BoundValue::Kind::Id
                                                         : BoundValue::Kind::Prop,
                     arg_value(s.cargs[1], binding)};
        if (eval_constraint(g, s.ckind, a, b)) {
            ++successes;
            run_steps(g, steps, index + 1, binding, stats, on_solution);
        }
        break;
    }
    }

    if (successes == 0) ++stats.backtracks;
}

} // namespace patternforge::detail
