#include "netmat/graph.hpp"

#include <algorithm>

namespace netmat {

const char* tier_name(Tier t) {
    switch (t) {
        case Tier::WellFormed: return "well-formed";
        case Tier::Nonempty: return "nonempty";
        case Tier::Symmetric: return "symmetric";
        case Tier::NoMulti: return "no-multi";
        case Tier::Simple: return "simple";
        case Tier::Weighted: return "weighted";
        case Tier::BinaryWeighted: return "binary-weighted";
        case Tier::SymmetricWeighted: return "symmetric-weighted";
        case Tier::SimpleWeighted: return "simple-weighted";
        case Tier::PartitionedWeighted: return "partitioned-weighted";
    }
    return "?";
}

std::optional<Tier> tier_from_name(const std::string& name) {
    static const std::map<std::string, Tier> table = {
        {"well-formed", Tier::WellFormed},
        {"nonempty", Tier::Nonempty},
        {"symmetric", Tier::Symmetric},
        {"no-multi", Tier::NoMulti},
        {"simple", Tier::Simple},
        {"weighted", Tier::Weighted},
        {"binary-weighted", Tier::BinaryWeighted},
        {"symmetric-weighted", Tier::SymmetricWeighted},
        {"simple-weighted", Tier::SimpleWeighted},
        {"partitioned-weighted", Tier::PartitionedWeighted},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const std::vector<Tier>& tier_parents(Tier t) {
    static const std::vector<Tier> none;
    static const std::vector<Tier> wf = {Tier::WellFormed};
    static const std::vector<Tier> ne = {Tier::Nonempty};
    static const std::vector<Tier> nm = {Tier::NoMulti};
    static const std::vector<Tier> we = {Tier::Weighted};
    static const std::vector<Tier> we_sym = {Tier::Weighted, Tier::Symmetric};
    static const std::vector<Tier> we_simple = {Tier::Weighted, Tier::Simple};
    switch (t) {
        case Tier::WellFormed: return none;
        case Tier::Nonempty: return wf;
        case Tier::Symmetric: return ne;
        case Tier::NoMulti: return ne;
        case Tier::Simple: return nm;
        case Tier::Weighted: return nm;
        case Tier::BinaryWeighted: return we;
        case Tier::SymmetricWeighted: return we_sym;
        case Tier::SimpleWeighted: return we_simple;
        case Tier::PartitionedWeighted: return we;
    }
    return none;
}

NetworkBuildResult NetworkSystem::build(std::vector<NodeLabel> nodes,
                                                std::vector<Edge> edges, WeightMap weights) {
    std::vector<Violation> violations;

    std::set<NodeLabel> seen;
    for (const auto& n : nodes) {
        if (n.empty()) violations.push_back({"empty-node-label", "node labels must be non-empty"});
        if (!seen.insert(n).second)
            violations.push_back({"duplicate-node", "node '" + n + "' listed more than once"});
    }
    for (const auto& e : edges) {
        if (!seen.count(e.head))
            violations.push_back({"unknown-endpoint", "edge head '" + e.head + "' is not a node"});
        if (!seen.count(e.tail))
            violations.push_back({"unknown-endpoint", "edge tail '" + e.tail + "' is not a node"});
    }

    std::set<std::pair<NodeLabel, NodeLabel>> edge_set;
    for (const auto& e : edges) edge_set.insert({e.head, e.tail});

    for (const auto& e : edges) {
        auto it = weights.find({e.head, e.tail});
        Rational w = it == weights.end() ? Rational() : it->second;
        if (w.is_zero() || w.is_negative())
            violations.push_back({"non-positive-weight", "edge (" + e.head + ", " + e.tail +
                                                             ") must have weight > 0, got " +
                                                             w.str()});
    }
    for (const auto& [pair, w] : weights) {
        if (!edge_set.count(pair) && !w.is_zero())
            violations.push_back({"weight-on-non-edge", "weight assigned to unlisted pair (" +
                                                            pair.first + ", " + pair.second + ")"});
    }

    NetworkBuildResult result;
    result.violations = std::move(violations);
    if (!result.violations.empty()) return result;

    NetworkSystem sys;
    sys.nodes_ = std::move(nodes);
    sys.edges_ = std::move(edges);
    sys.weights_ = std::move(weights);
    for (std::size_t i = 0; i < sys.nodes_.size(); ++i) sys.index_.emplace(sys.nodes_[i], i);
    sys.edge_set_ = std::move(edge_set);
    result.system = std::move(sys);
    return result;
}

std::optional<std::size_t> NetworkSystem::node_index(const NodeLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool NetworkSystem::has_edge(const NodeLabel& head, const NodeLabel& tail) const {
    return edge_set_.count({head, tail}) != 0;
}

Rational NetworkSystem::weight(const NodeLabel& head, const NodeLabel& tail) const {
    auto it = weights_.find({head, tail});
    return it == weights_.end() ? Rational() : it->second;
}

Rational NetworkSystem::weighted_out_degree(const NodeLabel& u) const {
    if (!node_index(u)) throw std::invalid_argument("unknown node '" + u + "'");
    Rational sum;
    for (const auto& x : nodes_)
        if (has_edge(u, x)) sum += weight(u, x);
    return sum;
}

Rational NetworkSystem::weighted_in_degree(const NodeLabel& u) const {
    if (!node_index(u)) throw std::invalid_argument("unknown node '" + u + "'");
    Rational sum;
    for (const auto& x : nodes_)
        if (has_edge(x, u)) sum += weight(x, u);
    return sum;
}

bool NetworkSystem::weight_balanced(const NodeLabel& u) const {
    return weighted_out_degree(u) == weighted_in_degree(u);
}

bool NetworkSystem::has_self_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.head == e.tail; });
}

namespace {

// Predicate of a single tier level, ignoring ancestors.
std::optional<Violation> level_violation(const NetworkSystem& sys, Tier tier) {
    switch (tier) {
        case Tier::WellFormed:
            return std::nullopt;  // holds by construction
        case Tier::Nonempty:
            if (sys.edges().empty()) return Violation{"empty-edge-list", "edge list is empty"};
            return std::nullopt;
        case Tier::Symmetric:
            for (const auto& e : sys.edges())
                if (!sys.has_edge(e.tail, e.head))
                    return Violation{"missing-reverse-edge",
                                     "edge (" + e.head + ", " + e.tail + ") has no reverse"};
            return std::nullopt;
        case Tier::NoMulti: {
            std::set<std::pair<NodeLabel, NodeLabel>> seen;
            for (const auto& e : sys.edges())
                if (!seen.insert({e.head, e.tail}).second)
                    return Violation{"duplicate-edge",
                                     "edge (" + e.head + ", " + e.tail + ") listed more than once"};
            return std::nullopt;
        }
        case Tier::Simple:
            for (const auto& e : sys.edges())
                if (e.head == e.tail)
                    return Violation{"self-loop", "self-loop at node '" + e.head + "'"};
            return std::nullopt;
        case Tier::Weighted:
            // positive weights on edges and zero elsewhere hold by construction
            return std::nullopt;
        case Tier::BinaryWeighted:
            for (const auto& e : sys.edges())
                if (!(sys.weight(e.head, e.tail) == Rational(1)))
                    return Violation{"non-unit-weight", "edge (" + e.head + ", " + e.tail +
                                                            ") has weight " +
                                                            sys.weight(e.head, e.tail).str()};
            return std::nullopt;
        case Tier::SymmetricWeighted:
            for (const auto& e : sys.edges())
                if (!(sys.weight(e.head, e.tail) == sys.weight(e.tail, e.head)))
                    return Violation{"asymmetric-weight",
                                     "edges (" + e.head + ", " + e.tail + ") and reverse differ"};
            return std::nullopt;
        case Tier::SimpleWeighted:
            return std::nullopt;  // fully covered by ancestors
        case Tier::PartitionedWeighted:
            if (sys.node_count() < 3)
                return Violation{"too-few-nodes",
                                 "a partition needs at least 2 boundary and 1 interior node"};
            return std::nullopt;
    }
    return std::nullopt;
}

void collect_tiers(Tier tier, std::vector<Tier>& order, std::set<Tier>& seen) {
    if (!seen.insert(tier).second) return;
    for (Tier p : tier_parents(tier)) collect_tiers(p, order, seen);
    order.push_back(tier);
}

}  // namespace

ValidationReport validate(const NetworkSystem& sys, Tier tier) {
    std::vector<Tier> order;
    std::set<Tier> seen;
    collect_tiers(tier, order, seen);

    ValidationReport report;
    for (Tier t : order) {
        if (auto v = level_violation(sys, t)) report.violations.push_back({t, *v});
    }
    report.ok = report.violations.empty();
    return report;
}

bool passes(const NetworkSystem& sys, Tier tier) { return validate(sys, tier).ok; }

Partition make_partition(const NetworkSystem& sys, std::size_t boundary_size) {
    const std::size_t m = sys.node_count();
    if (boundary_size < 2 || boundary_size + 1 > m)
        throw std::invalid_argument(
            "invalid boundary size " + std::to_string(boundary_size) + " for " +
            std::to_string(m) +
            " nodes: the boundary needs at least 2 nodes and the interior at least 1");
    Partition p;
    p.boundary.assign(sys.nodes().begin(), sys.nodes().begin() + static_cast<std::ptrdiff_t>(boundary_size));
    p.interior.assign(sys.nodes().begin() + static_cast<std::ptrdiff_t>(boundary_size), sys.nodes().end());
    return p;
}

}  // namespace netmat
