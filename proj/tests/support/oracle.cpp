#include "support/oracle.hpp"

namespace netmat::oracle {

namespace {

// weight of the pair (a, b) by scanning the edge list, zero when absent
Rational pair_weight(const NetworkSystem& sys, const NodeLabel& a, const NodeLabel& b) {
    for (const Edge& e : sys.edges())
        if (e.head == a && e.tail == b) return sys.weight(a, b);
    return Rational();
}

}  // namespace

Matrix<Rational> adjacency(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    Matrix<Rational> a(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            a(i, j) = pair_weight(sys, nodes[i], nodes[j]);
    return a;
}

Matrix<Rational> out_degree(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    Matrix<Rational> d(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < nodes.size(); ++j) sum += pair_weight(sys, nodes[i], nodes[j]);
        d(i, i) = sum;
    }
    return d;
}

Matrix<Rational> in_degree(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    Matrix<Rational> d(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < nodes.size(); ++j) sum += pair_weight(sys, nodes[j], nodes[i]);
        d(i, i) = sum;
    }
    return d;
}

Matrix<Rational> laplacian(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    Matrix<Rational> l(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational outdeg;
        for (std::size_t j = 0; j < nodes.size(); ++j) outdeg += pair_weight(sys, nodes[i], nodes[j]);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            Rational a = pair_weight(sys, nodes[i], nodes[j]);
            l(i, j) = (i == j ? outdeg : Rational()) - a;
        }
    }
    return l;
}

Matrix<Rational> out_incidence(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    const auto& edges = sys.edges();
    Matrix<Rational> m(nodes.size(), edges.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            m(i, j) = edges[j].head == nodes[i] ? Rational(1) : Rational();
    return m;
}

Matrix<Rational> in_incidence(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    const auto& edges = sys.edges();
    Matrix<Rational> m(nodes.size(), edges.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            m(i, j) = edges[j].tail == nodes[i] ? Rational(1) : Rational();
    return m;
}

Matrix<Rational> oriented_incidence(const NetworkSystem& sys) {
    const auto& nodes = sys.nodes();
    const auto& edges = sys.edges();
    Matrix<Rational> m(nodes.size(), edges.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            Rational out = edges[j].head == nodes[i] ? Rational(1) : Rational();
            Rational in = edges[j].tail == nodes[i] ? Rational(1) : Rational();
            m(i, j) = out - in;
        }
    return m;
}

Matrix<Rational> edge_weights(const NetworkSystem& sys) {
    const auto& edges = sys.edges();
    Matrix<Rational> w(edges.size(), edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j)
        w(j, j) = sys.weight(edges[j].head, edges[j].tail);
    return w;
}

TopologyMatrices<Rational> all(const NetworkSystem& sys) {
    TopologyMatrices<Rational> t;
    t.adjacency = adjacency(sys);
    t.out_degree = out_degree(sys);
    t.in_degree = in_degree(sys);
    t.laplacian = laplacian(sys);
    t.edge_weights = edge_weights(sys);
    bool loop_free = true;
    for (const Edge& e : sys.edges())
        if (e.head == e.tail) loop_free = false;
    if (loop_free) {
        t.out_incidence = out_incidence(sys);
        t.in_incidence = in_incidence(sys);
        t.incidence = oriented_incidence(sys);
    }
    return t;
}

}  // namespace netmat::oracle
