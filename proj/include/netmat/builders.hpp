#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "netmat/graph.hpp"
#include "netmat/matrix.hpp"

namespace netmat {

/// Thrown when a builder or check is invoked on a system that does not reach
/// the tier it requires.
struct TierError : std::runtime_error {
    Tier required;
    TierError(Tier t, const ValidationReport& report)
        : std::runtime_error(message(t, report)), required(t) {}

    static std::string message(Tier t, const ValidationReport& report) {
        std::string msg = std::string("system does not reach tier '") + tier_name(t) + "'";
        for (const auto& tv : report.violations)
            msg += "\n  [" + std::string(tier_name(tv.tier)) + "] " + tv.violation.code + ": " +
                   tv.violation.detail;
        return msg;
    }
};

inline void require_tier(const NetworkSystem& sys, Tier tier) {
    ValidationReport report = validate(sys, tier);
    if (!report.ok) throw TierError(tier, report);
}

/// All topology matrices of a system. The incidence members are only present
/// when the system is self-loop-free (Simple tier within the weighted
/// lattice); adjacency, degrees, Laplacian and the edge-weight matrix exist
/// for every weighted system.
template <typename S>
struct TopologyMatrices {
    Matrix<S> adjacency;        // m x m
    Matrix<S> out_degree;       // m x m diagonal
    Matrix<S> in_degree;        // m x m diagonal
    Matrix<S> laplacian;        // m x m
    Matrix<S> edge_weights;     // n x n diagonal
    std::optional<Matrix<S>> out_incidence;  // m x n
    std::optional<Matrix<S>> in_incidence;   // m x n
    std::optional<Matrix<S>> incidence;      // m x n, out minus in

    [[nodiscard]] bool has_incidence() const { return incidence.has_value(); }
};

/// m x m matrix whose (i,j) entry is the weight of the edge from node i to
/// node j, zero when that pair is not an edge. Requires the Weighted tier.
template <typename S>
Matrix<S> adjacency_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    const auto& nodes = sys.nodes();
    return Matrix<S>::build(nodes.size(), nodes.size(), [&](std::size_t i, std::size_t j) {
        return scalar_traits<S>::from_rational(sys.weight(nodes[i], nodes[j]));
    });
}

/// Diagonal matrix of weighted out-degrees. The rational backend follows the
/// definitional route diag(A * J_m); the float backend sums degrees directly.
template <typename S>
Matrix<S> out_degree_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    if constexpr (scalar_traits<S>::exact) {
        Matrix<S> a = adjacency_matrix<S>(sys);
        return diag_matrix(mat_mul(a, ones_mat<S>(sys.node_count())));
    } else {
        const auto& nodes = sys.nodes();
        return Matrix<S>::build(nodes.size(), nodes.size(), [&](std::size_t i, std::size_t j) {
            if (i != j) return scalar_traits<S>::zero();
            return scalar_traits<S>::from_rational(sys.weighted_out_degree(nodes[i]));
        });
    }
}

/// Diagonal matrix of weighted in-degrees, diag(A^T * J_m) on rationals.
template <typename S>
Matrix<S> in_degree_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    if constexpr (scalar_traits<S>::exact) {
        Matrix<S> at = transpose(adjacency_matrix<S>(sys));
        return diag_matrix(mat_mul(at, ones_mat<S>(sys.node_count())));
    } else {
        const auto& nodes = sys.nodes();
        return Matrix<S>::build(nodes.size(), nodes.size(), [&](std::size_t i, std::size_t j) {
            if (i != j) return scalar_traits<S>::zero();
            return scalar_traits<S>::from_rational(sys.weighted_in_degree(nodes[i]));
        });
    }
}

/// Laplacian: out-degree matrix minus adjacency matrix.
template <typename S>
Matrix<S> laplacian_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    return out_degree_matrix<S>(sys) - adjacency_matrix<S>(sys);
}

/// m x n 0/1 matrix marking each edge's head node; one 1 per column.
/// Requires a simple weighted system (no self-loops, no multi-edges).
template <typename S>
Matrix<S> out_incidence_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::SimpleWeighted);
    const auto& nodes = sys.nodes();
    const auto& edges = sys.edges();
    return Matrix<S>::build(nodes.size(), edges.size(), [&](std::size_t i, std::size_t j) {
        return edges[j].head == nodes[i] ? scalar_traits<S>::one() : scalar_traits<S>::zero();
    });
}

/// m x n 0/1 matrix marking each edge's tail node.
template <typename S>
Matrix<S> in_incidence_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::SimpleWeighted);
    const auto& nodes = sys.nodes();
    const auto& edges = sys.edges();
    return Matrix<S>::build(nodes.size(), edges.size(), [&](std::size_t i, std::size_t j) {
        return edges[j].tail == nodes[i] ? scalar_traits<S>::one() : scalar_traits<S>::zero();
    });
}

/// Oriented incidence matrix: out-incidence minus in-incidence. Entries in
/// {-1, 0, +1}; each column holds exactly one +1 and one -1.
template <typename S>
Matrix<S> incidence_matrix(const NetworkSystem& sys) {
    return out_incidence_matrix<S>(sys) - in_incidence_matrix<S>(sys);
}

/// n x n diagonal matrix of edge weights in edge-list order.
template <typename S>
Matrix<S> weight_matrix(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    const auto& edges = sys.edges();
    return Matrix<S>::build(edges.size(), edges.size(), [&](std::size_t i, std::size_t j) {
        if (i != j) return scalar_traits<S>::zero();
        return scalar_traits<S>::from_rational(sys.weight(edges[j].head, edges[j].tail));
    });
}

/// Builds the whole bundle. Incidence members are left empty when the system
/// has self-loops.
template <typename S>
TopologyMatrices<S> build_all(const NetworkSystem& sys) {
    require_tier(sys, Tier::Weighted);
    TopologyMatrices<S> t;
    t.adjacency = adjacency_matrix<S>(sys);
    t.out_degree = out_degree_matrix<S>(sys);
    t.in_degree = in_degree_matrix<S>(sys);
    t.laplacian = laplacian_matrix<S>(sys);
    t.edge_weights = weight_matrix<S>(sys);
    if (!sys.has_self_loop()) {
        t.out_incidence = out_incidence_matrix<S>(sys);
        t.in_incidence = in_incidence_matrix<S>(sys);
        t.incidence = *t.out_incidence - *t.in_incidence;
    }
    return t;
}

}  // namespace netmat
