#pragma once

#include <optional>
#include <vector>

#include "netmat/builders.hpp"
#include "netmat/checks.hpp"

namespace netmat {

/// Result of a Kron reduction: the reduced matrix, the four blocks of the
/// split, the inverted interior block, the closure verdict (is the reduced
/// matrix again a Laplacian) and whether the interior inverse is entrywise
/// non-negative, the hypothesis under which closure is guaranteed.
template <typename S>
struct KronResult {
    Matrix<S> reduced;                 // |boundary| x |boundary|
    Matrix<S> boundary_block;          // top-left
    Matrix<S> boundary_interior_block; // top-right
    Matrix<S> interior_boundary_block; // bottom-left
    Matrix<S> interior_block;          // bottom-right
    Matrix<S> interior_inverse;
    CheckReport closure;
    bool nonneg_inverse = false;
};

/// Either a KronResult or the names of the interior nodes whose block could
/// not be inverted. A singular interior is an expected outcome, not an error.
template <typename S>
struct KronOutcome {
    std::optional<KronResult<S>> result;
    std::vector<NodeLabel> singular_interior;

    [[nodiscard]] bool ok() const { return result.has_value(); }
};

/// Closure report for an already-computed reduction.
template <typename S>
CheckReport check_closure(const KronResult<S>& res, double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("kron-closure", eps);
    r.details["nonneg-interior-inverse"] = res.nonneg_inverse ? "true" : "false";
    if (!is_laplacian(res.reduced, eps)) {
        r.verdict = Verdict::fail;
        // find the offending entry or row
        const Matrix<S>& red = res.reduced;
        for (std::size_t i = 0; i < red.rows(); ++i) {
            for (std::size_t j = 0; j < red.cols(); ++j) {
                bool bad = i == j ? !scalar_traits<S>::nonneg(red(i, j), eps)
                                  : !scalar_traits<S>::nonpos(red(i, j), eps);
                if (bad) {
                    r.witness = Witness{i, j, scalar_traits<S>::str(red(i, j)), "",
                                        i == j ? "negative diagonal" : "positive off-diagonal"};
                    return r;
                }
            }
            S sum = row_sum(red, i);
            if (!scalar_traits<S>::is_zero(sum, eps)) {
                r.witness = Witness{i, 0, scalar_traits<S>::str(sum), "0", "nonzero row sum"};
                return r;
            }
        }
    }
    return r;
}

/// Schur-complement reduction of a square matrix along a partition: splits at
/// the boundary size, inverts the interior block and forms
/// top_left - top_right * inverse * bottom_left.
template <typename S>
KronOutcome<S> kron_red(const Matrix<S>& laplacian, const Partition& part,
                        double eps = kDefaultEps) {
    const std::size_t nb = part.boundary.size();
    const std::size_t ni = part.interior.size();
    if (nb < 2 || ni == 0)
        throw std::invalid_argument(
            "invalid partition: the boundary needs at least 2 nodes and the interior at least 1");
    if (!laplacian.square() || laplacian.rows() != nb + ni)
        throw DimensionError("matrix size does not match the partition");

    BlockSplit<S> blocks = split_block(laplacian, nb, nb);

    KronOutcome<S> out;
    std::optional<Matrix<S>> inv = mat_inverse(blocks.bottom_right);
    if (!inv) {
        out.singular_interior = part.interior;
        return out;
    }

    KronResult<S> res;
    res.reduced = blocks.top_left -
                  mat_mul(mat_mul(blocks.top_right, *inv), blocks.bottom_left);
    res.boundary_block = std::move(blocks.top_left);
    res.boundary_interior_block = std::move(blocks.top_right);
    res.interior_boundary_block = std::move(blocks.bottom_left);
    res.interior_block = std::move(blocks.bottom_right);
    res.interior_inverse = std::move(*inv);

    res.nonneg_inverse = true;
    for (std::size_t i = 0; i < res.interior_inverse.rows() && res.nonneg_inverse; ++i)
        for (std::size_t j = 0; j < res.interior_inverse.cols(); ++j)
            if (!scalar_traits<S>::nonneg(res.interior_inverse(i, j), eps)) {
                res.nonneg_inverse = false;
                break;
            }

    res.closure = check_closure(res, eps);
    out.result = std::move(res);
    return out;
}

/// Builds the Laplacian of the system and reduces it along the partition.
/// The partition must be a prefix/suffix split of the system's node order.
template <typename S>
KronOutcome<S> kron_reduce_system(const NetworkSystem& sys, const Partition& part,
                                  double eps = kDefaultEps) {
    require_tier(sys, Tier::Weighted);
    const auto& nodes = sys.nodes();
    if (part.boundary.size() + part.interior.size() != nodes.size())
        throw std::invalid_argument("partition does not cover the node list");
    for (std::size_t i = 0; i < part.boundary.size(); ++i)
        if (part.boundary[i] != nodes[i])
            throw std::invalid_argument("partition boundary must be a prefix of the node order");
    for (std::size_t i = 0; i < part.interior.size(); ++i)
        if (part.interior[i] != nodes[part.boundary.size() + i])
            throw std::invalid_argument("partition interior must be a suffix of the node order");
    return kron_red(laplacian_matrix<S>(sys), part, eps);
}

}  // namespace netmat
