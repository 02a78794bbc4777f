#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netmat/rational.hpp"

namespace netmat {

using NodeLabel = std::string;

/// Directed edge. head is the origin node, tail the destination.
struct Edge {
    NodeLabel head;
    NodeLabel tail;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using WeightMap = std::map<std::pair<NodeLabel, NodeLabel>, Rational>;

/// Structural levels a network system can be validated against. Each tier
/// implies its ancestors: Simple implies NoMulti implies Nonempty implies
/// WellFormed; SymmetricWeighted implies both Weighted and Symmetric, and
/// so on.
enum class Tier {
    WellFormed,
    Nonempty,
    Symmetric,
    NoMulti,
    Simple,
    Weighted,
    BinaryWeighted,
    SymmetricWeighted,
    SimpleWeighted,
    PartitionedWeighted,
};

const char* tier_name(Tier t);
std::optional<Tier> tier_from_name(const std::string& name);

/// Direct parents of a tier in the implication order.
const std::vector<Tier>& tier_parents(Tier t);

struct Violation {
    std::string code;    // stable identifier, e.g. "duplicate-node"
    std::string detail;  // human-readable context
};

struct TierViolation {
    Tier tier;
    Violation violation;
};

struct ValidationReport {
    bool ok = false;
    std::vector<TierViolation> violations;  // first failing predicate per tier level
};

struct NetworkBuildResult;

/// Weighted digraph with ordered node and edge lists and a total weight map
/// (absent pairs weigh zero). Instances are immutable and always satisfy the
/// WellFormed invariants: construction goes through build() which returns
/// violations as data instead of throwing.
class NetworkSystem {
public:
    static NetworkBuildResult build(std::vector<NodeLabel> nodes, std::vector<Edge> edges,
                                    WeightMap weights);

    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<NodeLabel>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const WeightMap& weights() const { return weights_; }

    [[nodiscard]] std::optional<std::size_t> node_index(const NodeLabel& label) const;
    [[nodiscard]] bool has_edge(const NodeLabel& head, const NodeLabel& tail) const;
    /// Weight of the pair (head, tail); zero when the pair is not an edge.
    [[nodiscard]] Rational weight(const NodeLabel& head, const NodeLabel& tail) const;

    /// Sum of weights of edges leaving u. Throws std::invalid_argument on an
    /// unknown node.
    [[nodiscard]] Rational weighted_out_degree(const NodeLabel& u) const;
    /// Sum of weights of edges entering u.
    [[nodiscard]] Rational weighted_in_degree(const NodeLabel& u) const;
    [[nodiscard]] bool weight_balanced(const NodeLabel& u) const;

    [[nodiscard]] bool has_self_loop() const;

private:
    NetworkSystem() = default;

    std::vector<NodeLabel> nodes_;
    std::vector<Edge> edges_;
    WeightMap weights_;
    std::unordered_map<NodeLabel, std::size_t> index_;
    std::set<std::pair<NodeLabel, NodeLabel>> edge_set_;
};

struct NetworkBuildResult {
    std::optional<NetworkSystem> system;
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const { return system.has_value(); }
};

/// Checks the tier predicate and all its ancestors; reports the first
/// failing predicate of each failing level.
ValidationReport validate(const NetworkSystem& sys, Tier tier);

/// Convenience wrapper: true iff validate(sys, tier).ok.
bool passes(const NetworkSystem& sys, Tier tier);

/// Split of the node order into a boundary prefix and interior suffix.
struct Partition {
    std::vector<NodeLabel> boundary;
    std::vector<NodeLabel> interior;
};

/// Boundary takes the first boundary_size nodes. Requires at least two
/// boundary nodes and a non-empty interior; throws std::invalid_argument
/// otherwise.
Partition make_partition(const NetworkSystem& sys, std::size_t boundary_size);

}  // namespace netmat
