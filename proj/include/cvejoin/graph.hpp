#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cvejoin/errors.hpp"

namespace cvejoin {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored canonically:
/// each pair as (min,max), the list sorted lexicographically. Immutable after
/// construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes. Duplicate pairs are an error, not a dedupe:
    // silent merging would hide caller bugs in union/partition code.
    Graph(int n, std::vector<Edge> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

// Standard families. Labeling: cycle joins i to (i+1) mod n; complete_bipartite
// has parts {0..p-1} and {p..p+q-1}; petersen is the outer C5 (0..4), inner
// pentagram (5..9, step 2), and spokes i -- i+5.
Graph cycle(int n);              // n >= 3
Graph complete(int n);           // n >= 1
Graph complete_bipartite(int p, int q); // p, q >= 1
Graph petersen();

// Blockwise relabeled union: vertex labels of part i are shifted by the total
// order of parts 0..i-1.
Graph disjoint_union(const std::vector<Graph>& parts);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

// n x m 0/1 matrix; column j holds the endpoints of edge j in canonical order.
Eigen::MatrixXi incidence_matrix(const Graph& g);

// Vertex i of the result is edge i of g; adjacency iff the edges share an endpoint.
Graph line_graph(const Graph& g);

// Subdivide every edge with a new vertex (labels n..n+m-1, in canonical edge
// order) and join every non-adjacent vertex pair of g. Original edges removed.
Graph central_graph(const Graph& g);

// The common degree if g is regular, nullopt otherwise.
std::optional<int> regular_degree(const Graph& g);

bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);

// BFS levels from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

} // namespace cvejoin
