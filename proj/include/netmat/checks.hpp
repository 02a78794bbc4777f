#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netmat/builders.hpp"

namespace netmat {

enum class Verdict { pass, fail, skip };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skip: return "skip";
    }
    return "?";
}

/// Index and entry values explaining a failed check.
struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// Outcome of one identity check. A witness is present exactly when the
/// verdict is fail; details carry auxiliary flags such as the two sides of a
/// biconditional or the reason a check was skipped.
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::string backend;
    std::optional<double> tolerance;  // float backend only
    std::map<std::string, std::string> details;
};

namespace detail {

template <typename S>
CheckReport make_report(const std::string& name, double eps) {
    CheckReport r;
    r.name = name;
    r.backend = scalar_traits<S>::backend_name;
    if (!scalar_traits<S>::exact) r.tolerance = eps;
    return r;
}

template <typename S>
std::optional<Witness> first_difference(const Matrix<S>& lhs, const Matrix<S>& rhs, double eps) {
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (!scalar_traits<S>::eq(lhs(i, j), rhs(i, j), eps))
                return Witness{i, j, scalar_traits<S>::str(lhs(i, j)),
                               scalar_traits<S>::str(rhs(i, j)), ""};
    return std::nullopt;
}

}  // namespace detail

/// Every row of the Laplacian sums to zero.
template <typename S>
CheckReport check_row_sums(const TopologyMatrices<S>& t, double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("row-sums-zero", eps);
    for (std::size_t i = 0; i < t.laplacian.rows(); ++i) {
        S sum = row_sum(t.laplacian, i);
        if (!scalar_traits<S>::is_zero(sum, eps)) {
            r.verdict = Verdict::fail;
            r.witness = Witness{i, 0, scalar_traits<S>::str(sum), "0", "row sum"};
            return r;
        }
    }
    return r;
}

/// The in-degree matrix equals the out-degree matrix exactly when the
/// all-ones matrix transposed times the Laplacian vanishes. The biconditional
/// itself is checked; the details record which side held.
template <typename S>
CheckReport check_col_sums_iff_balanced(const TopologyMatrices<S>& t, const NetworkSystem& sys,
                                        double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("col-sums-iff-balanced", eps);
    const std::size_t m = sys.node_count();

    bool degrees_equal = mat_eq(t.in_degree, t.out_degree, eps);
    Matrix<S> prod = mat_mul(transpose(ones_mat<S>(m)), t.laplacian);
    bool cols_zero = mat_eq(prod, Matrix<S>(m, m), eps);

    r.details["degrees-equal"] = degrees_equal ? "true" : "false";
    r.details["columns-zero"] = cols_zero ? "true" : "false";
    if (degrees_equal != cols_zero) {
        r.verdict = Verdict::fail;
        // point at the first entry of whichever side is nonconforming
        if (auto w = detail::first_difference(t.in_degree, t.out_degree, eps)) {
            w->note = "in-degree vs out-degree";
            r.witness = w;
        } else if (auto w2 = detail::first_difference(prod, Matrix<S>(m, m), eps)) {
            w2->note = "ones^T * L vs zero";
            r.witness = w2;
        }
    }
    return r;
}

/// Out-degree and in-degree matrices factor through their incidence
/// matrices: Dout = Iout W Iout^T and Din = Iin W Iin^T.
template <typename S>
CheckReport check_deg_incidence(const TopologyMatrices<S>& t, double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("degree-incidence-product", eps);
    if (!t.has_incidence()) throw std::logic_error("incidence matrices are not present");

    Matrix<S> out_prod = mat_mul(mat_mul(*t.out_incidence, t.edge_weights),
                                 transpose(*t.out_incidence));
    if (auto w = detail::first_difference(t.out_degree, out_prod, eps)) {
        w->note = "out-degree side";
        r.verdict = Verdict::fail;
        r.witness = w;
        return r;
    }
    Matrix<S> in_prod = mat_mul(mat_mul(*t.in_incidence, t.edge_weights),
                                transpose(*t.in_incidence));
    if (auto w = detail::first_difference(t.in_degree, in_prod, eps)) {
        w->note = "in-degree side";
        r.verdict = Verdict::fail;
        r.witness = w;
    }
    return r;
}

/// Adjacency factors through the incidence matrices: A = Iout W Iin^T.
template <typename S>
CheckReport check_adj_incidence(const TopologyMatrices<S>& t, double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("adjacency-incidence-product", eps);
    if (!t.has_incidence()) throw std::logic_error("incidence matrices are not present");
    Matrix<S> prod = mat_mul(mat_mul(*t.out_incidence, t.edge_weights),
                             transpose(*t.in_incidence));
    if (auto w = detail::first_difference(t.adjacency, prod, eps)) {
        r.verdict = Verdict::fail;
        r.witness = w;
    }
    return r;
}

/// The Laplacian factors through the oriented incidence matrix:
/// L = Iout W K^T with K = Iout - Iin.
template <typename S>
CheckReport check_lap_incidence(const TopologyMatrices<S>& t, double eps = kDefaultEps) {
    CheckReport r = detail::make_report<S>("laplacian-incidence-product", eps);
    if (!t.has_incidence()) throw std::logic_error("incidence matrices are not present");
    Matrix<S> prod = mat_mul(mat_mul(*t.out_incidence, t.edge_weights),
                             transpose(*t.incidence));
    if (auto w = detail::first_difference(t.laplacian, prod, eps)) {
        r.verdict = Verdict::fail;
        r.witness = w;
    }
    return r;
}

/// Adjacency and Laplacian are symmetric matrices. Only meaningful on
/// symmetric-weighted systems; anything else is a tier error, not a fail.
template <typename S>
CheckReport check_symmetry(const TopologyMatrices<S>& t, const NetworkSystem& sys,
                           double eps = kDefaultEps) {
    require_tier(sys, Tier::SymmetricWeighted);
    CheckReport r = detail::make_report<S>("symmetry", eps);
    auto asym_witness = [&](const Matrix<S>& m, const char* which) -> std::optional<Witness> {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i + 1; j < m.cols(); ++j)
                if (!scalar_traits<S>::eq(m(i, j), m(j, i), eps))
                    return Witness{i, j, scalar_traits<S>::str(m(i, j)),
                                   scalar_traits<S>::str(m(j, i)), which};
        return std::nullopt;
    };
    if (auto w = asym_witness(t.adjacency, "adjacency")) {
        r.verdict = Verdict::fail;
        r.witness = w;
        return r;
    }
    if (auto w = asym_witness(t.laplacian, "laplacian")) {
        r.verdict = Verdict::fail;
        r.witness = w;
    }
    return r;
}

/// Runs every check that applies at the system's highest passing tier.
/// Checks that do not apply are reported with verdict skip and a reason.
template <typename S>
std::vector<CheckReport> run_suite(const NetworkSystem& sys, double eps = kDefaultEps) {
    require_tier(sys, Tier::Weighted);
    TopologyMatrices<S> t = build_all<S>(sys);

    std::vector<CheckReport> reports;
    reports.push_back(check_row_sums(t, eps));
    reports.push_back(check_col_sums_iff_balanced(t, sys, eps));

    if (t.has_incidence()) {
        reports.push_back(check_deg_incidence(t, eps));
        reports.push_back(check_adj_incidence(t, eps));
        reports.push_back(check_lap_incidence(t, eps));
    } else {
        for (const char* name : {"degree-incidence-product", "adjacency-incidence-product",
                                 "laplacian-incidence-product"}) {
            CheckReport skip = detail::make_report<S>(name, eps);
            skip.verdict = Verdict::skip;
            skip.details["skip-reason"] = "system has self-loops; incidence matrices undefined";
            reports.push_back(std::move(skip));
        }
    }

    if (passes(sys, Tier::SymmetricWeighted)) {
        reports.push_back(check_symmetry(t, sys, eps));
    } else {
        CheckReport skip = detail::make_report<S>("symmetry", eps);
        skip.verdict = Verdict::skip;
        skip.details["skip-reason"] = "system is not symmetric-weighted";
        reports.push_back(std::move(skip));
    }
    return reports;
}

}  // namespace netmat
