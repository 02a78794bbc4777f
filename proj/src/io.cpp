#include "netmat/io.hpp"

#include <cctype>

namespace netmat::io {

namespace {

using nlohmann::json;

std::optional<Rational> rational_from_json(const json& v, std::string* error) {
    try {
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
        if (v.is_number_unsigned()) return Rational(static_cast<std::int64_t>(v.get<std::uint64_t>()));
        if (v.is_number_float()) return Rational::from_double(v.get<double>());
        if (v.is_string()) return Rational::from_string(v.get<std::string>());
        if (v.is_object() && v.contains("num") && v.contains("den")) {
            auto part = [](const json& p) {
                if (p.is_number_integer()) return BigInt(p.get<std::int64_t>());
                if (p.is_number_unsigned())
                    return BigInt(static_cast<std::int64_t>(p.get<std::uint64_t>()));
                if (p.is_string()) return BigInt::from_string(p.get<std::string>());
                throw std::invalid_argument("num/den must be integers or digit strings");
            };
            return Rational(part(v.at("num")), part(v.at("den")));
        }
    } catch (const std::exception& e) {
        *error = e.what();
        return std::nullopt;
    }
    *error = "expected a number, \"p/q\" string, or {\"num\":..,\"den\":..} object";
    return std::nullopt;
}

json rational_part_to_json(const BigInt& b) {
    if (b.fits_int64()) return b.to_int64();
    return b.str();
}

}  // namespace

nlohmann::json scalar_to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_int64()) return r.num().to_int64();
    return json{{"num", rational_part_to_json(r.num())}, {"den", rational_part_to_json(r.den())}};
}

std::string scalar_to_decimal(const Rational& r) {
    return scalar_traits<double>::str(r.to_double());
}

ParsedGraph parse_graph(std::string_view text) {
    ParsedGraph out;
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        out.violations.push_back({"syntax", "document is not valid JSON"});
        return out;
    }
    if (!doc.is_object()) {
        out.violations.push_back({"schema", "top-level value must be an object"});
        return out;
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
        out.violations.push_back({"schema", "'nodes' must be an array of strings"});
        return out;
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        out.violations.push_back({"schema", "'edges' must be an array of objects"});
        return out;
    }

    std::vector<NodeLabel> nodes;
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
        const json& n = doc["nodes"][i];
        if (!n.is_string()) {
            out.violations.push_back(
                {"schema", "nodes[" + std::to_string(i) + "] must be a string"});
            continue;
        }
        nodes.push_back(n.get<std::string>());
    }

    std::vector<Edge> edges;
    WeightMap weights;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const json& e = doc["edges"][i];
        std::string ctx = "edges[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("head") || !e.contains("tail") ||
            !e.contains("weight") || !e["head"].is_string() || !e["tail"].is_string()) {
            out.violations.push_back(
                {"schema", ctx + " must be {\"head\":str, \"tail\":str, \"weight\":...}"});
            continue;
        }
        std::string error;
        auto w = rational_from_json(e["weight"], &error);
        if (!w) {
            out.violations.push_back({"bad-weight", ctx + ".weight: " + error});
            continue;
        }
        if (w->is_zero() || w->is_negative()) {
            out.violations.push_back(
                {"non-positive-weight", ctx + ".weight: edge weight must be positive"});
            continue;
        }
        Edge edge{e["head"].get<std::string>(), e["tail"].get<std::string>()};
        auto [it, inserted] = weights.emplace(std::make_pair(edge.head, edge.tail), *w);
        if (!inserted && !(it->second == *w)) {
            out.violations.push_back(
                {"conflicting-weight",
                 ctx + ": pair (" + edge.head + ", " + edge.tail + ") already has weight " +
                     it->second.str()});
            continue;
        }
        edges.push_back(std::move(edge));
    }

    if (doc.contains("partition")) {
        const json& p = doc["partition"];
        if (!p.is_object() || !p.contains("boundary_size") ||
            !p["boundary_size"].is_number_unsigned()) {
            out.violations.push_back(
                {"schema", "'partition' must be {\"boundary_size\": <count>}"});
        } else {
            out.boundary_size = p["boundary_size"].get<std::size_t>();
        }
    }

    if (doc.contains("voltages")) {
        const json& vs = doc["voltages"];
        if (!vs.is_array()) {
            out.violations.push_back({"schema", "'voltages' must be an array"});
        } else {
            std::vector<Rational> voltages;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                std::string error;
                auto v = rational_from_json(vs[i], &error);
                if (!v) {
                    out.violations.push_back(
                        {"bad-voltage", "voltages[" + std::to_string(i) + "]: " + error});
                    break;
                }
                voltages.push_back(std::move(*v));
            }
            if (voltages.size() == vs.size()) {
                if (voltages.size() != nodes.size())
                    out.violations.push_back(
                        {"schema", "'voltages' must have one entry per node"});
                else
                    out.voltages = std::move(voltages);
            }
        }
    }

    if (!out.violations.empty()) return out;

    auto built = NetworkSystem::build(std::move(nodes), std::move(edges), std::move(weights));
    out.violations = std::move(built.violations);
    out.system = std::move(built.system);
    return out;
}

std::string emit_graph(const NetworkSystem& sys, std::optional<std::size_t> boundary_size,
                       const std::optional<std::vector<Rational>>& voltages) {
    json doc;
    doc["nodes"] = sys.nodes();
    json edges = json::array();
    for (const Edge& e : sys.edges()) {
        edges.push_back(json{{"head", e.head},
                             {"tail", e.tail},
                             {"weight", scalar_to_json(sys.weight(e.head, e.tail))}});
    }
    doc["edges"] = std::move(edges);
    if (boundary_size) doc["partition"] = json{{"boundary_size", *boundary_size}};
    if (voltages) {
        json vs = json::array();
        for (const auto& v : *voltages) vs.push_back(scalar_to_json(v));
        doc["voltages"] = std::move(vs);
    }
    return doc.dump(2) + "\n";
}

std::optional<MatrixFormat> matrix_format_from_name(const std::string& name) {
    if (name == "json") return MatrixFormat::json;
    if (name == "mm") return MatrixFormat::mm_coordinate;
    if (name == "mma") return MatrixFormat::mm_array;
    if (name == "csv") return MatrixFormat::csv;
    return std::nullopt;
}

std::string report_line(const CheckReport& report) {
    std::string line;
    switch (report.verdict) {
        case Verdict::pass: line = "PASS "; break;
        case Verdict::fail: line = "FAIL "; break;
        case Verdict::skip: line = "SKIP "; break;
    }
    line += report.name;
    line += " [" + report.backend;
    if (report.tolerance) line += " eps=" + scalar_traits<double>::str(*report.tolerance);
    line += "]";
    if (report.witness) {
        const Witness& w = *report.witness;
        line += " at (" + std::to_string(w.row) + "," + std::to_string(w.col) + ")";
        line += " lhs=" + w.lhs;
        if (!w.rhs.empty()) line += " rhs=" + w.rhs;
        if (!w.note.empty()) line += " (" + w.note + ")";
    }
    for (const auto& [key, value] : report.details) line += " " + key + "=" + value;
    return line;
}

nlohmann::json report_to_json(const CheckReport& report) {
    json j{{"name", report.name},
           {"verdict", verdict_name(report.verdict)},
           {"backend", report.backend}};
    if (report.tolerance) j["tolerance"] = *report.tolerance;
    if (report.witness) {
        const Witness& w = *report.witness;
        json wj{{"row", w.row}, {"col", w.col}, {"lhs", w.lhs}};
        if (!w.rhs.empty()) wj["rhs"] = w.rhs;
        if (!w.note.empty()) wj["note"] = w.note;
        j["witness"] = std::move(wj);
    }
    if (!report.details.empty()) {
        json d;
        for (const auto& [key, value] : report.details) d[key] = value;
        j["details"] = std::move(d);
    }
    return j;
}

std::vector<Rational> parse_voltages(std::string_view text) {
    std::vector<Rational> out;
    std::string token;
    auto flush = [&] {
        // trim surrounding whitespace
        std::size_t b = 0, e = token.size();
        while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
        if (b == e) return;
        out.push_back(Rational::from_string(std::string_view(token).substr(b, e - b)));
    };
    for (char c : text) {
        if (c == ',' || c == '\n') {
            flush();
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    flush();
    if (out.empty()) throw std::invalid_argument("no voltage values given");
    return out;
}

}  // namespace netmat::io
