#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "netmat/checks.hpp"
#include "netmat/electrical.hpp"
#include "netmat/graph.hpp"
#include "netmat/matrix.hpp"

namespace netmat::io {

/// Outcome of parsing a graph document: either a well-formed system plus the
/// optional partition/voltages payload, or a list of violations.
struct ParsedGraph {
    std::optional<NetworkSystem> system;
    std::vector<Violation> violations;
    std::optional<std::size_t> boundary_size;
    std::optional<std::vector<Rational>> voltages;

    [[nodiscard]] bool ok() const { return system.has_value(); }
};

/// Parses the canonical JSON graph document. Syntax and semantic problems are
/// returned as violations with field context, never thrown.
ParsedGraph parse_graph(std::string_view text);

/// Serializes a system back to the canonical JSON document. parse_graph of
/// the result reproduces the system exactly.
std::string emit_graph(const NetworkSystem& sys, std::optional<std::size_t> boundary_size = {},
                       const std::optional<std::vector<Rational>>& voltages = {});

enum class MatrixFormat { json, mm_coordinate, mm_array, csv };
std::optional<MatrixFormat> matrix_format_from_name(const std::string& name);

/// Exact JSON value for a scalar: rationals as {"num":..,"den":..} (numbers
/// when they fit 64 bits, decimal strings otherwise), integers plain.
nlohmann::json scalar_to_json(const Rational& r);
inline nlohmann::json scalar_to_json(double v) { return v; }

/// Decimal rendering used by the text formats. Lossy for rationals whose
/// denominator is not a power of two.
std::string scalar_to_decimal(const Rational& r);
inline std::string scalar_to_decimal(double v) { return scalar_traits<double>::str(v); }

template <typename S>
nlohmann::json matrix_to_json(const Matrix<S>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Deterministic text emission. Matrix Market output is row-major with
/// 1-based indices in the coordinate form and space-separated columns in the
/// array form.
template <typename S>
std::string emit_matrix(const Matrix<S>& m, MatrixFormat format) {
    std::string out;
    switch (format) {
        case MatrixFormat::json:
            out = matrix_to_json(m).dump(2);
            out.push_back('\n');
            break;
        case MatrixFormat::csv:
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (j) out.push_back(',');
                    out += scalar_to_decimal(m(i, j));
                }
                out.push_back('\n');
            }
            break;
        case MatrixFormat::mm_array:
            out = "%%MatrixMarket matrix array real general\n";
            out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (j) out.push_back(' ');
                    out += scalar_to_decimal(m(i, j));
                }
                out.push_back('\n');
            }
            break;
        case MatrixFormat::mm_coordinate: {
            std::size_t nnz = 0;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!scalar_traits<S>::is_zero(m(i, j), 0.0)) ++nnz;
            out = "%%MatrixMarket matrix coordinate real general\n";
            out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                   std::to_string(nnz) + "\n";
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!scalar_traits<S>::is_zero(m(i, j), 0.0))
                        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                               scalar_to_decimal(m(i, j)) + "\n";
            break;
        }
    }
    return out;
}

/// One line per report: "PASS name [backend] ..." with the witness and any
/// details appended.
std::string report_line(const CheckReport& report);
nlohmann::json report_to_json(const CheckReport& report);

/// Parses "3,1" or "1.5, -2" style inline voltage lists, or the content of a
/// one-column CSV file (one value per line). Throws std::invalid_argument.
std::vector<Rational> parse_voltages(std::string_view text);

template <typename S>
nlohmann::json power_report_to_json(const NetworkSystem& sys, const PowerReport<S>& report) {
    nlohmann::json per_edge = nlohmann::json::array();
    for (const auto& [key, power] : report.per_edge) {
        per_edge.push_back(nlohmann::json{{"head", sys.nodes()[key.first]},
                                          {"tail", sys.nodes()[key.second]},
                                          {"power", scalar_to_json(power)}});
    }
    nlohmann::json injected = nlohmann::json::array();
    for (std::size_t i = 0; i < report.injected.dim(); ++i)
        injected.push_back(scalar_to_json(report.injected[i]));
    return nlohmann::json{{"per_edge", std::move(per_edge)},
                          {"injected", std::move(injected)},
                          {"total", scalar_to_json(report.total)},
                          {"quadratic_form", scalar_to_json(report.quadratic_form)}};
}

}  // namespace netmat::io
