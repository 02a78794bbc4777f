#pragma once

#include <map>
#include <utility>

#include "netmat/builders.hpp"

namespace netmat {

/// Per-node voltages, aligned with the system's node order.
template <typename S>
using VoltageProfile = Vector<S>;

/// Dissipation summary of a resistive network under a voltage profile.
/// total is computed from per-edge powers, quadratic_form as v^T L v; the two
/// agree (exactly on rationals, within tolerance on float).
template <typename S>
struct PowerReport {
    std::map<std::pair<std::size_t, std::size_t>, S> per_edge;  // watts, keyed by node indices
    Vector<S> injected;                                         // amps, one entry per node
    S total = scalar_traits<S>::zero();                         // watts
    S quadratic_form = scalar_traits<S>::zero();                // watts
};

/// Current through the pair (i, j): conductance times voltage difference.
/// Zero when the pair is not an edge.
template <typename S>
S edge_current(const TopologyMatrices<S>& t, const VoltageProfile<S>& v, std::size_t i,
               std::size_t j) {
    if (i >= v.dim() || j >= v.dim()) throw std::out_of_range("node index out of range");
    return t.adjacency(i, j) * (v[i] - v[j]);
}

/// Net injected current at node i: the sum of currents to every other node.
/// Equals row i of L * v.
template <typename S>
S injected_current(const TopologyMatrices<S>& t, const VoltageProfile<S>& v, std::size_t i) {
    if (i >= v.dim()) throw std::out_of_range("node index out of range");
    S sum = scalar_traits<S>::zero();
    for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j == i) continue;
        sum += edge_current(t, v, i, j);
    }
    return sum;
}

/// Power dissipated in the resistor between nodes i and j: current squared
/// times resistance, with resistance the reciprocal of the conductance.
/// Throws when (i, j) is not an edge.
template <typename S>
S edge_power(const TopologyMatrices<S>& t, const VoltageProfile<S>& v, std::size_t i,
             std::size_t j) {
    if (i >= v.dim() || j >= v.dim()) throw std::out_of_range("node index out of range");
    const S& conductance = t.adjacency(i, j);
    if (scalar_traits<S>::is_zero(conductance, 0.0))
        throw std::invalid_argument("no resistor between the requested nodes");
    S current = edge_current(t, v, i, j);
    return current * current / conductance;
}

/// Half the sum of conductance times squared voltage difference over all
/// ordered node pairs. Independent route to the quadratic form v^T L v;
/// requires a symmetric-weighted system.
template <typename S>
S quadratic_form_expansion(const NetworkSystem& sys, const TopologyMatrices<S>& t,
                           const VoltageProfile<S>& v) {
    require_tier(sys, Tier::SymmetricWeighted);
    if (v.dim() != sys.node_count()) throw DimensionError("voltage profile does not match nodes");
    S sum = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) {
            const S& a = t.adjacency(i, j);
            if (scalar_traits<S>::is_zero(a, 0.0)) continue;
            S d = v[i] - v[j];
            sum += a * d * d;
        }
    return sum / (scalar_traits<S>::one() + scalar_traits<S>::one());
}

/// Full dissipation report. Per-edge powers enumerate the system's directed
/// edges; the half factor in the total compensates the mirrored double count
/// on symmetric systems.
template <typename S>
PowerReport<S> total_power(const NetworkSystem& sys, const TopologyMatrices<S>& t,
                           const VoltageProfile<S>& v) {
    require_tier(sys, Tier::SymmetricWeighted);
    if (v.dim() != sys.node_count()) throw DimensionError("voltage profile does not match nodes");

    PowerReport<S> report;
    S sum = scalar_traits<S>::zero();
    for (const Edge& e : sys.edges()) {
        std::size_t i = *sys.node_index(e.head);
        std::size_t j = *sys.node_index(e.tail);
        S p = edge_power(t, v, i, j);
        sum += p;
        report.per_edge.emplace(std::make_pair(i, j), std::move(p));
    }
    report.total = sum / (scalar_traits<S>::one() + scalar_traits<S>::one());

    report.injected = Vector<S>(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) report.injected[i] = injected_current(t, v, i);

    report.quadratic_form = inner_prod(v, mat_vec_mul(t.laplacian, v));
    return report;
}

}  // namespace netmat
