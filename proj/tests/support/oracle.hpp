#pragma once

#include "netmat/builders.hpp"
#include "netmat/graph.hpp"
#include "netmat/matrix.hpp"

// Ground-truth constructions transcribed literally from the matrix
// definitions with plain double loops over the node and edge lists. They
// share only the Matrix container with the library and never call the
// builder code paths, so the two can check each other.
namespace netmat::oracle {

Matrix<Rational> adjacency(const NetworkSystem& sys);
Matrix<Rational> out_degree(const NetworkSystem& sys);
Matrix<Rational> in_degree(const NetworkSystem& sys);
Matrix<Rational> laplacian(const NetworkSystem& sys);
Matrix<Rational> out_incidence(const NetworkSystem& sys);
Matrix<Rational> in_incidence(const NetworkSystem& sys);
Matrix<Rational> oriented_incidence(const NetworkSystem& sys);
Matrix<Rational> edge_weights(const NetworkSystem& sys);

/// Bundle, with incidence members present only for self-loop-free systems.
TopologyMatrices<Rational> all(const NetworkSystem& sys);

}  // namespace netmat::oracle
