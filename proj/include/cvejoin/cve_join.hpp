#pragma once

#include <array>
#include <optional>
#include <utility>

#include "cvejoin/graph.hpp"

namespace cvejoin {

/// The parameter tuple (n_i, m_i, k_i) that drives every closed form.
/// k_i is present only when operand i is regular.
struct CveParameters {
    int n1 = 0, m1 = 0;
    int n2 = 0, m2 = 0;
    int n3 = 0, m3 = 0;
    std::optional<int> k1, k2, k3;

    static CveParameters from_graphs(const Graph& g1, const Graph& g2, const Graph& g3);
};

long long cve_order(const CveParameters& p);
long long cve_size(const CveParameters& p);

enum class CveBlock { g1_vertices = 0, g1_edge_vertices = 1, g2_vertices = 2, g3_vertices = 3 };

/// A constructed central vertex-edge join with its block layout
/// [V(G1) | I(G1) | V(G2) | V(G3)] and the operands it was built from.
struct CveGraph {
    Graph graph;
    Graph g1, g2, g3;
    CveParameters params;
    bool g1_triangle_free = false;
    std::array<std::pair<int, int>, 4> blocks; // half-open vertex ranges

    CveBlock block_of(int v) const;

    // Eccentricity and index closed forms need both join sides nonempty.
    bool closed_forms_available() const { return params.n2 >= 1 && params.n3 >= 1; }
};

// Central graph of g1 with V(G1) joined completely to V(G2) and the edge
// vertices I(G1) joined completely to V(G3). g1 must be connected with at
// least one edge; g2 and g3 may be disconnected (the join restores
// connectivity). Order-0 operands are rejected unless allow_degenerate is
// set, in which case the graph is still built and the closed forms report
// themselves unavailable.
CveGraph cve_join(const Graph& g1, const Graph& g2, const Graph& g3,
                  bool allow_degenerate = false);

// Degree by block: n1+n2-1 on V(G1), n3+2 on I(G1), deg+n1 on V(G2), deg+m1 on V(G3).
int cve_degree(const CveGraph& g, int v);

// Closed-form eccentricity: 2 on V(G1) and I(G1) and 3 elsewhere when g1 is
// triangle-free, 3 everywhere otherwise. Requires n2, n3 >= 1.
int cve_eccentricity(const CveGraph& g, int v);

} // namespace cvejoin
