#include "mperturb/graphdist.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "mperturb/error.hpp"

namespace mperturb {

std::size_t MatrixDigraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& out : adjacency) m += out.size();
  return m;
}

MatrixDigraph build_digraph(const Matrix& a, double zero_tol) {
  MatrixDigraph g{a.size(), std::vector<std::vector<std::size_t>>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && std::abs(a(i, j)) > zero_tol) g.adjacency[i].push_back(j);
  return g;
}

std::vector<Distance> distances_from(const MatrixDigraph& g, std::size_t source) {
  if (source >= g.n) throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(source));
  std::vector<Distance> dist(g.n);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.adjacency[u]) {
      if (dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

Distance distance(const MatrixDigraph& g, std::size_t from, std::size_t to) {
  if (to >= g.n) throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(to));
  return distances_from(g, from)[to];
}

bool is_strongly_connected(const MatrixDigraph& g) {
  if (g.n <= 1) return true;
  // Everything reachable from node 0 in G and in the reversed graph.
  MatrixDigraph reversed{g.n, std::vector<std::vector<std::size_t>>(g.n)};
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v : g.adjacency[u]) reversed.adjacency[v].push_back(u);
  auto all_reached = [](const std::vector<Distance>& d) {
    return std::all_of(d.begin(), d.end(), [](const Distance& x) { return x.has_value(); });
  };
  return all_reached(distances_from(g, 0)) && all_reached(distances_from(reversed, 0));
}

std::size_t bouchon_M(const Matrix& a, const Matrix& e_pattern, double zero_tol) {
  if (e_pattern.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "perturbation pattern size differs from A");
  }
  const MatrixDigraph g = build_digraph(a, zero_tol);
  std::size_t worst = 0;
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Distance> dist;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j || e_pattern(i, j) == 0.0) continue;
      if (dist.empty()) dist = distances_from(g, i);
      if (!dist[j]) {
        throw Error(ErrorKind::UnreachablePair, "no path " + std::to_string(i + 1) + " -> " +
                                                    std::to_string(j + 1) + " in the graph of A");
      }
      any = true;
      worst = std::max(worst, *dist[j]);
    }
  }
  if (!any) throw Error(ErrorKind::EmptyPerturbation, "E has no nonzero off-diagonal entry");
  return worst;
}

}  // namespace mperturb
