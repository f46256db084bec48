#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mperturb/matrix.hpp"

namespace mperturb {

// Directed graph of a matrix: i -> j iff |a_ij| > zero_tol and i != j.
struct MatrixDigraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, no self-loops

  std::size_t edge_count() const noexcept;
};

// nullopt means unreachable.
using Distance = std::optional<std::size_t>;

MatrixDigraph build_digraph(const Matrix& a, double zero_tol = 0.0);

// BFS distances from source to every node.
std::vector<Distance> distances_from(const MatrixDigraph& g, std::size_t source);

Distance distance(const MatrixDigraph& g, std::size_t from, std::size_t to);

bool is_strongly_connected(const MatrixDigraph& g);

// max d(i,j) over off-diagonal (i,j) with e_ij != 0, distances taken in the
// graph of A. Throws EmptyPerturbation when E has no off-diagonal nonzero and
// UnreachablePair when one of the required distances is infinite.
std::size_t bouchon_M(const Matrix& a, const Matrix& e_pattern, double zero_tol = 0.0);

}  // namespace mperturb
