#include "patternforge/pattern.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace patternforge {

std::string_view to_string(ConstraintKind k) {
    switch (k) {
    case ConstraintKind::Eq: return "eq";
    case ConstraintKind::Neq: return "neq";
    case ConstraintKind::Lt: return "lt";
    case ConstraintKind::Leq: return "leq";
    case ConstraintKind::Red: return "red";
    case ConstraintKind::Green: return "green";
    }
    return "?";
}

bool is_constraint(const Atom& a) { return std::holds_alternative<ConstraintAtom>(a); }

std::string PatternValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& f : findings) os << f.message << "; ";
    return os.str();
}

namespace {

void collect_positive_vars(const Atom& a, std::set<std::string>& out) {
    if (const auto* v = std::get_if<VertexAtom>(&a)) {
        if (v->id.is_var()) out.insert(v->id.name);
        for (const auto& t : v->props)
            if (t.is_var()) out.insert(t.name);
    } else if (const auto* e = std::get_if<EdgeAtom>(&a)) {
        if (e->src.is_var()) out.insert(e->src.name);
        if (e->dst.is_var()) out.insert(e->dst.name);
        for (const auto& t : e->props)
            if (t.is_var()) out.insert(t.name);
    }
}

void collect_all_vars(const Atom& a, std::set<std::string>& out) {
    collect_positive_vars(a, out);
    if (const auto* c = std::get_if<ConstraintAtom>(&a))
        for (const auto& t : c->args)
            if (t.is_var()) out.insert(t.name);
}

} // namespace

void derive_exports(Pattern& p) {
    const std::size_t n = p.subpatterns.size();
    std::vector<std::set<std::string>> used_at(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& a : p.subpatterns[i].atoms) collect_all_vars(a, used_at[i]);

    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::string> later;
        for (std::size_t j = i + 1; j < n; ++j) later.insert(used_at[j].begin(), used_at[j].end());
        std::vector<std::string> exports;
        // Export order follows first appearance in this subpattern's atoms.
        std::set<std::string> seen;
        for (const auto& a : p.subpatterns[i].atoms) {
            std::set<std::string> here;
            collect_all_vars(a, here);
            for (const auto& v : here)
                if (later.contains(v) && seen.insert(v).second) exports.push_back(v);
        }
        p.subpatterns[i].exports = std::move(exports);
    }
}

PatternValidationReport validate_pattern(const Pattern& p, const GraphSchema& schema) {
    PatternValidationReport report;
    auto add = [&](PatternFinding::Code code, std::string msg) {
        report.findings.push_back({code, std::move(msg)});
    };

    if (p.subpatterns.empty()) add(PatternFinding::Code::EmptyBody, "pattern has no subpatterns");

    std::set<std::string> names;
    for (const auto& sp : p.subpatterns) {
        if (!names.insert(sp.name).second)
            add(PatternFinding::Code::DuplicateSubpatternName,
                "duplicate subpattern name '" + sp.name + "'");
        if (sp.atoms.empty())
            add(PatternFinding::Code::EmptyBody, "subpattern '" + sp.name + "' has no atoms");
    }

    // Bound-before-use in as-written order: the engine evaluates constraints
    // at their position, so every constraint variable (and the projection)
    // must be introduced by a positive atom strictly earlier.
    std::set<std::string> bound;
    bool projection_bound = false;
    for (const auto& sp : p.subpatterns) {
        for (const auto& a : sp.atoms) {
            if (const auto* v = std::get_if<VertexAtom>(&a)) {
                if (v->props.size() != schema.arity(v->vtype))
                    add(PatternFinding::Code::ArityMismatch,
                        "vertex atom " + std::string(to_string(v->vtype)) + " in '" + sp.name +
                            "' has " + std::to_string(v->props.size()) + " properties, schema says " +
                            std::to_string(schema.arity(v->vtype)));
            } else if (const auto* e = std::get_if<EdgeAtom>(&a)) {
                if (e->props.size() != schema.arity(e->etype))
                    add(PatternFinding::Code::ArityMismatch,
                        "edge atom " + std::string(to_string(e->etype)) + " in '" + sp.name +
                            "' has " + std::to_string(e->props.size()) + " properties, schema says " +
                            std::to_string(schema.arity(e->etype)));
            } else if (const auto* c = std::get_if<ConstraintAtom>(&a)) {
                if (c->args.size() != 2)
                    add(PatternFinding::Code::ConstraintArity,
                        std::string(to_string(c->kind)) + " in '" + sp.name + "' takes 2 arguments, got " +
                            std::to_string(c->args.size()));
                for (const auto& t : c->args) {
                    if (t.kind == Term::Kind::Wildcard)
                        add(PatternFinding::Code::WildcardInConstraint,
                            "wildcard argument to " + std::string(to_string(c->kind)) + " in '" +
                                sp.name + "'");
                    if (t.is_var() && !bound.contains(t.name))
                        add(PatternFinding::Code::RangeRestriction,
                            "constraint variable '" + t.name +
                                "' is not bound by any earlier positive atom");
                }
            }
            collect_positive_vars(a, bound);
        }
    }
    if (bound.contains(p.projection)) projection_bound = true;
    if (!projection_bound)
        add(PatternFinding::Code::RangeRestriction,
            "projection variable '" + p.projection + "' does not occur in a positive atom");

    // Exports must name variables bound in this or an earlier subpattern.
    std::set<std::string> bound_so_far;
    for (const auto& sp : p.subpatterns) {
        for (const auto& a : sp.atoms) collect_positive_vars(a, bound_so_far);
        for (const auto& ex : sp.exports)
            if (!bound_so_far.contains(ex))
                add(PatternFinding::Code::ExportViolation,
                    "export '" + ex + "' of '" + sp.name +
                        "' is not bound by this or an earlier subpattern");
    }

    return report;
}

} // namespace patternforge
