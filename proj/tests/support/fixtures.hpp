#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "netmat/graph.hpp"
#include "netmat/matrix.hpp"

// Hand-built systems and matrix literals reused across the test suites.
namespace netmat::fixtures {

inline Matrix<Rational> rmat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix<Rational> m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (std::int64_t v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

inline Vector<Rational> rvec(std::initializer_list<std::int64_t> entries) {
    Vector<Rational> v(entries.size());
    std::size_t i = 0;
    for (std::int64_t e : entries) v[i++] = Rational(e);
    return v;
}

inline Matrix<double> dmat(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix<double> m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline NetworkSystem make_system(std::vector<NodeLabel> nodes,
                                 std::vector<std::tuple<NodeLabel, NodeLabel, std::int64_t>> edges) {
    std::vector<Edge> es;
    WeightMap ws;
    for (auto& [h, t, w] : edges) {
        es.push_back({h, t});
        ws[{h, t}] = Rational(w);
    }
    auto built = NetworkSystem::build(std::move(nodes), std::move(es), std::move(ws));
    return std::move(*built.system);
}

/// Three-node directed cycle: (a,b) weight 2, (b,c) weight 3, (c,a) weight 4.
inline NetworkSystem g3() {
    return make_system({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "a", 4}});
}

/// Symmetric unit-weight path a-b-c with node order (a, c, b).
inline NetworkSystem p3() {
    return make_system({"a", "c", "b"},
                       {{"a", "b", 1}, {"b", "a", 1}, {"b", "c", 1}, {"c", "b", 1}});
}

/// Two nodes joined in both directions with weight 2.
inline NetworkSystem two_cycle() {
    return make_system({"a", "b"}, {{"a", "b", 2}, {"b", "a", 2}});
}

/// Complete symmetric graph on 4 nodes, unit weights.
inline NetworkSystem k4() {
    std::vector<std::tuple<NodeLabel, NodeLabel, std::int64_t>> edges;
    std::vector<NodeLabel> nodes{"n0", "n1", "n2", "n3"};
    for (const auto& a : nodes)
        for (const auto& b : nodes)
            if (a != b) edges.push_back({a, b, 1});
    return make_system(nodes, edges);
}

/// Single node with a self-loop of weight 5.
inline NetworkSystem self_loop_single() { return make_system({"a"}, {{"a", "a", 5}}); }

/// Unit-weight symmetric path on 4 nodes n0-n1-n2-n3.
inline NetworkSystem p4() {
    return make_system({"n0", "n1", "n2", "n3"},
                       {{"n0", "n1", 1}, {"n1", "n0", 1}, {"n1", "n2", 1}, {"n2", "n1", 1},
                        {"n2", "n3", 1}, {"n3", "n2", 1}});
}

}  // namespace netmat::fixtures
