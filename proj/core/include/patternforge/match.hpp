#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "patternforge/graph_store.hpp"
#include "patternforge/pattern.hpp"

namespace patternforge {

// A value a pattern variable can take: a vertex id or a property value.
// Property values are stored bit-cast so the two share one representation.
struct BoundValue {
    enum class Kind { Id, Prop };
    Kind kind = Kind::Id;
    std::uint64_t bits = 0;

    static BoundValue id(ObjectId v) { return {Kind::Id, v}; }
    static BoundValue prop(PropertyValue v) { return {Kind::Prop, static_cast<std::uint64_t>(v)}; }

    ObjectId as_id() const { return bits; }
    PropertyValue as_prop() const { return static_cast<PropertyValue>(bits); }

    bool operator==(const BoundValue&) const = default;
};

// One witness: variable name -> value. Built left-to-right during matching;
// within one search path a variable is only rebound after backtracking past
// its binding point.
using Binding = std::map<std::string, BoundValue>;

// atom_matches counts successful positive-atom-vs-fact unifications
// (constraint checks touch no facts and are not counted). rule_firings counts
// completed rule bodies: one per full solution for the unified and
// brute-force strategies, one per materialized subpattern tuple for the
// subpattern strategy. backtracks counts atom steps that exhausted their
// candidates without a single success. All counters are deterministic for a
// frozen store; elapsed_seconds is wall time and is not.
struct MatchStats {
    std::uint64_t atom_matches = 0;
    std::uint64_t rule_firings = 0;
    std::uint64_t backtracks = 0;
    double elapsed_seconds = 0.0;

    std::uint64_t inferences() const { return atom_matches + rule_firings; }
};

enum class Strategy { Unified, Subpattern, Bruteforce };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from(std::string_view name);

struct MatchResult {
    Strategy strategy = Strategy::Unified;
    std::vector<ObjectId> roots; // deduplicated, ascending
    MatchStats stats;
    std::map<ObjectId, Binding> witnesses; // first full binding per root
};

// Pipelined depth-first evaluation of the whole pattern as one rule: atoms in
// as-written order, chronological backtracking, bindings flow across
// subpattern boundaries. Access path per edge atom: out-index when src is
// bound, in-index when only dst is bound, per-type scan otherwise.
MatchResult match_unified(const GraphStore& g, const Pattern& p);

// Materializes each subpattern standalone (re-enumerating anything an earlier
// subpattern already found), then joins the relations in subpattern order.
// Constraints whose variables never bind inside their own subpattern are
// applied when that subpattern's relation is joined.
MatchResult match_subpattern(const GraphStore& g, const Pattern& p);

struct BruteforceOptions {
    // Guard on the product of per-atom candidate-list sizes, in log10. The
    // default admits the graphs this oracle is meant for (up to roughly 20k
    // edges for a 32-atom pattern) and refuses anything much larger.
    double max_log10_domain_product = 120.0;
};

// Index-free oracle: nested enumeration over per-type candidate lists built
// by linear scans, with type membership as the only pre-pruning. Ground truth
// for the other two strategies on small graphs. Throws SizeGuard when the
// domain product exceeds the configured bound.
MatchResult match_bruteforce(const GraphStore& g, const Pattern& p,
                             const BruteforceOptions& options = {});

// Re-checks every atom of `p` under `witness` against the store.
bool recheck_witness(const GraphStore& g, const Pattern& p, const Binding& witness);

} // namespace patternforge
