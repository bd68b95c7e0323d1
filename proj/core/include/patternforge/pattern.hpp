#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "patternforge/schema.hpp"
#include "patternforge/types.hpp"

namespace patternforge {

// A term in an atom argument position. Variables start with an upper-case
// letter; `_` is an anonymous wildcard and never binds.
struct Term {
    enum class Kind { Variable, ConstId, ConstProp, Wildcard };

    Kind kind = Kind::Wildcard;
    std::string name;         // Variable
    ObjectId id_value = 0;    // ConstId
    PropertyValue prop_value = 0; // ConstProp

    static Term var(std::string n) { return {Kind::Variable, std::move(n), 0, 0}; }
    static Term const_id(ObjectId v) { return {Kind::ConstId, {}, v, 0}; }
    static Term const_prop(PropertyValue v) { return {Kind::ConstProp, {}, 0, v}; }
    static Term wildcard() { return {Kind::Wildcard, {}, 0, 0}; }

    bool is_var() const { return kind == Kind::Variable; }

    bool operator==(const Term&) const = default;
};

enum class ConstraintKind { Eq, Neq, Lt, Leq, Red, Green };

std::string_view to_string(ConstraintKind k);

// Type-membership goal; `props` follows the store schema's property order,
// not the fact-file argument order.
struct VertexAtom {
    VertexType vtype;
    Term id;
    std::vector<Term> props;
    bool operator==(const VertexAtom&) const = default;
};

struct EdgeAtom {
    EdgeType etype;
    Term src;
    Term dst;
    std::vector<Term> props;
    bool operator==(const EdgeAtom&) const = default;
};

// Red relates two vertex ids: distinct, and their key properties are equal.
// Green relates two already-bound property values: equality. Eq/Neq/Lt/Leq
// compare two bound values directly.
struct ConstraintAtom {
    ConstraintKind kind;
    std::vector<Term> args;
    bool operator==(const ConstraintAtom&) const = default;
};

using Atom = std::variant<VertexAtom, EdgeAtom, ConstraintAtom>;

bool is_constraint(const Atom& a);

struct Subpattern {
    std::string name;
    std::vector<Atom> atoms;
    // Variables visible to later subpatterns; derived from usage, never parsed.
    std::vector<std::string> exports;
    bool operator==(const Subpattern&) const = default;
};

struct Pattern {
    std::vector<Subpattern> subpatterns;
    std::string projection;

    std::size_t clause_count() const {
        std::size_t n = 0;
        for (const auto& sp : subpatterns) n += sp.atoms.size();
        return n;
    }

    bool operator==(const Pattern&) const = default;
};

struct PatternFinding {
    enum class Code {
        RangeRestriction,
        ArityMismatch,
        ExportViolation,
        WildcardInConstraint,
        ConstraintArity,
        DuplicateSubpatternName,
        EmptyBody,
    };
    Code code;
    std::string message;
};

struct PatternValidationReport {
    std::vector<PatternFinding> findings;
    bool ok() const { return findings.empty(); }
    std::string summary() const;
};

// Empty report iff: arities match the schema, the projection and every
// constraint variable are bound by an earlier positive atom (in as-written
// order), wildcards stay out of constraints, and exports are honored.
PatternValidationReport validate_pattern(const Pattern& p, const GraphSchema& schema);

// Fills in `exports` on every subpattern from cross-subpattern variable usage.
void derive_exports(Pattern& p);

} // namespace patternforge
