#include "cvejoin/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cvejoin {

const char* errc_name(errc c) {
    switch (c) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::endpoint_out_of_range: return "EndpointOutOfRange";
        case errc::invalid_size: return "InvalidSize";
        case errc::empty_list: return "EmptyList";
        case errc::no_edges: return "NoEdges";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::disconnected: return "Disconnected";
        case errc::no_convergence: return "NoConvergence";
        case errc::not_regular: return "NotRegular";
        case errc::missing_regularity: return "MissingRegularity";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::closed_form_unavailable: return "ClosedFormUnavailable";
        case errc::too_small: return "TooSmall";
        case errc::h1_not_eligible: return "H1NotEligible";
        case errc::h2_least_eig_too_small: return "H2LeastEigTooSmall";
        case errc::mixed_orders: return "MixedOrders";
        case errc::empty_edge_set_g1: return "EmptyEdgeSetG1";
        case errc::empty_g2: return "EmptyG2";
        case errc::empty_g3: return "EmptyG3";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IOError";
    }
    return "UnknownError";
}

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
    if (n < 0)
        throw Error(errc::invalid_size, "vertex count must be non-negative, got " + std::to_string(n));
    for (auto& [u, v] : edge_list) {
        if (u == v)
            throw Error(errc::self_loop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(errc::endpoint_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end())
        throw Error(errc::duplicate_edge,
                    "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") appears twice");
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_)
        throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph cycle(int n) {
    if (n < 3) throw Error(errc::invalid_size, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> e;
    e.reserve(n);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw Error(errc::invalid_size, "complete graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> e;
    e.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1)
        throw Error(errc::invalid_size,
                    "complete bipartite needs p,q >= 1, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
    std::vector<Edge> e;
    e.reserve(p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph(p + q, std::move(e));
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(e));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw Error(errc::empty_list, "disjoint_union of no graphs");
    int n = 0;
    std::vector<Edge> e;
    for (const auto& g : parts) {
        for (const auto& [u, v] : g.edges()) e.emplace_back(u + n, v + n);
        n += g.order();
    }
    return Graph(n, std::move(e));
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Eigen::MatrixXi incidence_matrix(const Graph& g) {
    if (g.size() == 0) throw Error(errc::no_edges, "incidence matrix of an edgeless graph");
    Eigen::MatrixXi q = Eigen::MatrixXi::Zero(g.order(), g.size());
    for (int j = 0; j < g.size(); ++j) {
        q(g.edges()[j].first, j) = 1;
        q(g.edges()[j].second, j) = 1;
    }
    return q;
}

Graph line_graph(const Graph& g) {
    if (g.size() == 0) throw Error(errc::no_edges, "line graph of an edgeless graph");
    const auto& es = g.edges();
    const int m = g.size();
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
        }
    return Graph(m, std::move(e));
}

Graph central_graph(const Graph& g) {
    const int n = g.order();
    const int m = g.size();
    std::vector<Edge> e;
    // subdivision vertices n..n+m-1, one per edge in canonical order
    for (int j = 0; j < m; ++j) {
        e.emplace_back(g.edges()[j].first, n + j);
        e.emplace_back(g.edges()[j].second, n + j);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(n + m, std::move(e));
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

bool is_triangle_free(const Graph& g) {
    // neighbor-intersection scan over edges; neighbor lists are sorted
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) return false;
            if (nu[i] < nv[j]) ++i;
            else ++j;
        }
    }
    return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw Error(errc::vertex_out_of_range, "BFS source " + std::to_string(source));
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

} // namespace cvejoin
