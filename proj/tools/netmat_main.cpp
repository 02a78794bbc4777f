// netmat: build network topology matrices of weighted digraphs, machine-check
// their interrelation identities, Kron-reduce Laplacians and analyze power
// dissipation in resistive networks.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netmat/builders.hpp"
#include "netmat/checks.hpp"
#include "netmat/electrical.hpp"
#include "netmat/io.hpp"
#include "netmat/kron.hpp"

namespace {

using namespace netmat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // usage, validation and failed checks
constexpr int kExitSingular = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buf.str();
}

enum class Backend { rational, floating };

Backend resolve_backend(const std::string& flag, Backend subcommand_default) {
    std::string name = flag;
    if (name.empty()) {
        if (const char* env = std::getenv("NETMAT_BACKEND")) name = env;
    }
    if (name.empty()) return subcommand_default;
    if (name == "rational") return Backend::rational;
    if (name == "float") return Backend::floating;
    throw CLI::ValidationError("--backend", "expected 'rational' or 'float'");
}

io::ParsedGraph load_graph(const std::string& path) {
    io::ParsedGraph parsed = io::parse_graph(read_file(path));
    if (!parsed.ok()) {
        for (const auto& v : parsed.violations)
            std::cerr << "violation [" << v.code << "] " << v.detail << "\n";
    }
    return parsed;
}

NetworkSystem reorder_system(const NetworkSystem& sys, const std::string& order_csv) {
    std::vector<NodeLabel> order;
    std::string token;
    std::istringstream stream(order_csv);
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) order.push_back(token);
    }
    if (order.size() != sys.node_count())
        throw std::invalid_argument("--reorder must list every node exactly once");
    for (const auto& n : order)
        if (!sys.node_index(n))
            throw std::invalid_argument("--reorder names unknown node '" + n + "'");
    std::set<NodeLabel> dedup(order.begin(), order.end());
    if (dedup.size() != order.size())
        throw std::invalid_argument("--reorder lists a node twice");
    auto rebuilt = NetworkSystem::build(order, sys.edges(), sys.weights());
    return *rebuilt.system;  // permuting the node list preserves well-formedness
}

// ---- matrices ----

template <typename S>
int run_matrices(const NetworkSystem& sys, const std::string& which,
                 io::MatrixFormat format) {
    TopologyMatrices<S> t = build_all<S>(sys);

    auto pick = [&](const std::string& name) -> const Matrix<S>* {
        if (name == "A") return &t.adjacency;
        if (name == "Dout") return &t.out_degree;
        if (name == "Din") return &t.in_degree;
        if (name == "L") return &t.laplacian;
        if (name == "W") return &t.edge_weights;
        if (name == "Iout") return t.out_incidence ? &*t.out_incidence : nullptr;
        if (name == "Iin") return t.in_incidence ? &*t.in_incidence : nullptr;
        if (name == "K") return t.incidence ? &*t.incidence : nullptr;
        return nullptr;
    };

    if (scalar_traits<S>::exact && format != io::MatrixFormat::json)
        std::cerr << "warning: rational entries are rendered as lossy decimals in this format\n";

    if (which == "all") {
        if (format != io::MatrixFormat::json) {
            std::cerr << "--which all is only available with --format json\n";
            return kExitUsage;
        }
        json matrices;
        matrices["A"] = io::matrix_to_json(t.adjacency);
        matrices["Dout"] = io::matrix_to_json(t.out_degree);
        matrices["Din"] = io::matrix_to_json(t.in_degree);
        matrices["L"] = io::matrix_to_json(t.laplacian);
        matrices["W"] = io::matrix_to_json(t.edge_weights);
        if (t.has_incidence()) {
            matrices["Iout"] = io::matrix_to_json(*t.out_incidence);
            matrices["Iin"] = io::matrix_to_json(*t.in_incidence);
            matrices["K"] = io::matrix_to_json(*t.incidence);
        }
        json doc{{"backend", scalar_traits<S>::backend_name},
                 {"incidence_present", t.has_incidence()},
                 {"matrices", std::move(matrices)}};
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    const Matrix<S>* m = pick(which);
    if (!m) {
        std::cerr << "matrix '" << which
                  << "' is unavailable (incidence matrices need a self-loop-free system)\n";
        return kExitUsage;
    }
    std::cout << io::emit_matrix(*m, format);
    return kExitOk;
}

// ---- check ----

template <typename S>
int run_check(const NetworkSystem& sys, bool suite, bool as_json, double eps) {
    std::vector<CheckReport> reports = run_suite<S>(sys, eps);
    bool all_pass = true;
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail) all_pass = false;

    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(io::report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            if (r.verdict == Verdict::skip && !suite) continue;
            std::cout << io::report_line(r) << "\n";
        }
    }
    return all_pass ? kExitOk : kExitUsage;
}

// ---- kron ----

template <typename S>
int run_kron(const NetworkSystem& sys, std::size_t boundary, io::MatrixFormat format,
             double eps) {
    Partition part = make_partition(sys, boundary);
    KronOutcome<S> outcome = kron_reduce_system<S>(sys, part, eps);

    if (!outcome.ok()) {
        json doc{{"backend", scalar_traits<S>::backend_name},
                 {"singular_interior", outcome.singular_interior}};
        std::cout << doc.dump(2) << "\n";
        std::cerr << "interior block is singular; no reduction exists\n";
        return kExitSingular;
    }

    const KronResult<S>& res = *outcome.result;
    if (format == io::MatrixFormat::json) {
        json doc{{"backend", scalar_traits<S>::backend_name},
                 {"node_order", sys.nodes()},
                 {"boundary", part.boundary},
                 {"interior", part.interior},
                 {"reduced", io::matrix_to_json(res.reduced)},
                 {"closure", io::report_to_json(res.closure)},
                 {"nonneg_inverse", res.nonneg_inverse}};
        std::cout << doc.dump(2) << "\n";
    } else {
        if (scalar_traits<S>::exact)
            std::cerr << "warning: rational entries are rendered as lossy decimals in this format\n";
        std::cout << io::emit_matrix(res.reduced, format);
        std::cerr << io::report_line(res.closure) << "\n";
    }
    return kExitOk;
}

// ---- power ----

template <typename S>
int run_power(const NetworkSystem& sys, const std::vector<Rational>& voltages, bool as_json,
              double eps) {
    if (voltages.size() != sys.node_count()) {
        std::cerr << "expected " << sys.node_count() << " voltages, got " << voltages.size()
                  << "\n";
        return kExitUsage;
    }
    Vector<S> v(voltages.size());
    for (std::size_t i = 0; i < voltages.size(); ++i)
        v[i] = scalar_traits<S>::from_rational(voltages[i]);

    TopologyMatrices<S> t = build_all<S>(sys);
    PowerReport<S> report = total_power(sys, t, v);
    if (!scalar_traits<S>::eq(report.total, report.quadratic_form, eps))
        std::cerr << "warning: per-edge total and quadratic form disagree beyond eps\n";

    if (as_json) {
        json doc = io::power_report_to_json(sys, report);
        doc["backend"] = scalar_traits<S>::backend_name;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "injected current (A):\n";
        for (std::size_t i = 0; i < sys.node_count(); ++i)
            std::cout << "  " << sys.nodes()[i] << " "
                      << scalar_traits<S>::str(report.injected[i]) << "\n";
        std::cout << "edge dissipation (W):\n";
        for (const auto& [key, p] : report.per_edge)
            std::cout << "  (" << sys.nodes()[key.first] << "," << sys.nodes()[key.second]
                      << ") " << scalar_traits<S>::str(p) << "\n";
        std::cout << "total dissipation (W): " << scalar_traits<S>::str(report.total) << "\n";
        std::cout << "quadratic form (W): " << scalar_traits<S>::str(report.quadratic_form)
                  << "\n";
    }
    return kExitOk;
}

// ---- validate ----

int run_validate(const NetworkSystem& sys, const std::string& tier_name_str,
                 const std::string& path) {
    auto tier = tier_from_name(tier_name_str);
    if (!tier) {
        std::cerr << "unknown tier '" << tier_name_str << "'\n";
        return kExitUsage;
    }
    ValidationReport report = validate(sys, *tier);
    if (report.ok) {
        std::cout << path << ": reaches tier '" << tier_name_str << "'\n";
        return kExitOk;
    }
    for (const auto& tv : report.violations)
        std::cout << "violation at tier '" << tier_name(tv.tier) << "' [" << tv.violation.code
                  << "] " << tv.violation.detail << "\n";
    return kExitUsage;
}

std::vector<Rational> resolve_voltages(const std::string& flag,
                                       const io::ParsedGraph& parsed) {
    if (!flag.empty()) {
        if (std::filesystem::exists(flag)) return io::parse_voltages(read_file(flag));
        return io::parse_voltages(flag);
    }
    if (parsed.voltages) return *parsed.voltages;
    throw std::invalid_argument("no voltages: pass --voltages or add them to the document");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network topology matrices of weighted digraphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string backend_flag;
    std::string which = "all";
    std::string format_name = "json";
    std::string reorder;
    std::string voltages_flag;
    std::string tier_flag;
    double eps = kDefaultEps;
    bool suite = false;
    bool as_json = false;
    std::size_t boundary = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph document (JSON)")->required();
        cmd->add_option("--backend", backend_flag, "scalar backend: rational|float");
        cmd->add_option("--eps", eps, "absolute tolerance for float comparisons");
    };

    CLI::App* cmd_matrices = app.add_subcommand("matrices", "emit topology matrices");
    add_common(cmd_matrices);
    cmd_matrices->add_option("--which", which, "A|Dout|Din|L|K|Iout|Iin|W|all");
    cmd_matrices->add_option("--format", format_name, "json|mm|mma|csv");

    CLI::App* cmd_check = app.add_subcommand("check", "run the identity check suite");
    add_common(cmd_check);
    cmd_check->add_flag("--suite", suite, "also list skipped checks");
    cmd_check->add_flag("--json", as_json, "machine-readable report");

    CLI::App* cmd_kron = app.add_subcommand("kron", "Kron-reduce the Laplacian");
    add_common(cmd_kron);
    cmd_kron->add_option("--boundary", boundary, "number of boundary nodes (prefix)");
    cmd_kron->add_option("--reorder", reorder, "node order to apply first, comma-separated");
    cmd_kron->add_option("--format", format_name, "json|mm|mma|csv");

    CLI::App* cmd_power = app.add_subcommand("power", "power dissipation analysis");
    add_common(cmd_power);
    cmd_power->add_option("--voltages", voltages_flag, "inline list '3,1' or a one-column CSV file");
    cmd_power->add_flag("--json", as_json, "machine-readable report");

    CLI::App* cmd_validate = app.add_subcommand("validate", "validate a tier");
    add_common(cmd_validate);
    cmd_validate->add_option("--tier", tier_flag, "tier name, e.g. weighted")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        io::ParsedGraph parsed = load_graph(graph_path);
        if (!parsed.ok()) return kExitUsage;
        NetworkSystem sys = std::move(*parsed.system);

        if (cmd_matrices->parsed()) {
            auto format = io::matrix_format_from_name(format_name);
            if (!format) {
                std::cerr << "unknown format '" << format_name << "'\n";
                return kExitUsage;
            }
            Backend b = resolve_backend(backend_flag, Backend::rational);
            return b == Backend::rational ? run_matrices<Rational>(sys, which, *format)
                                          : run_matrices<double>(sys, which, *format);
        }
        if (cmd_check->parsed()) {
            Backend b = resolve_backend(backend_flag, Backend::rational);
            return b == Backend::rational ? run_check<Rational>(sys, suite, as_json, eps)
                                          : run_check<double>(sys, suite, as_json, eps);
        }
        if (cmd_kron->parsed()) {
            if (!reorder.empty()) sys = reorder_system(sys, reorder);
            if (boundary == 0) {
                if (!parsed.boundary_size) {
                    std::cerr << "no partition: pass --boundary or add one to the document\n";
                    return kExitUsage;
                }
                boundary = *parsed.boundary_size;
            }
            auto format = io::matrix_format_from_name(format_name);
            if (!format) {
                std::cerr << "unknown format '" << format_name << "'\n";
                return kExitUsage;
            }
            Backend b = resolve_backend(backend_flag, Backend::floating);
            return b == Backend::rational ? run_kron<Rational>(sys, boundary, *format, eps)
                                          : run_kron<double>(sys, boundary, *format, eps);
        }
        if (cmd_power->parsed()) {
            std::vector<Rational> voltages = resolve_voltages(voltages_flag, parsed);
            Backend b = resolve_backend(backend_flag, Backend::floating);
            return b == Backend::rational ? run_power<Rational>(sys, voltages, as_json, eps)
                                          : run_power<double>(sys, voltages, as_json, eps);
        }
        if (cmd_validate->parsed()) {
            return run_validate(sys, tier_flag, graph_path);
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const TierError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
