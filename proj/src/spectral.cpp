#include "cvejoin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace cvejoin {

Spectrum Spectrum::from_values(std::vector<double> vals, double group_tol) {
    std::sort(vals.begin(), vals.end(), std::greater<>());
    Spectrum s;
    s.values = std::move(vals);
    std::size_t i = 0;
    while (i < s.values.size()) {
        std::size_t j = i + 1;
        // gap-based grouping: extend while consecutive values stay within tol
        while (j < s.values.size() && s.values[j - 1] - s.values[j] <= group_tol) ++j;
        double rep = 0.0;
        for (std::size_t t = i; t < j; ++t) rep += s.values[t];
        rep /= static_cast<double>(j - i);
        s.groups.emplace_back(rep, static_cast<int>(j - i));
        i = j;
    }
    return s;
}

int Spectrum::multiplicity_near(double x, double tol) const {
    int count = 0;
    for (double v : values)
        if (std::abs(v - x) <= tol) ++count;
    return count;
}

Eigen::MatrixXi all_pairs_distances(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXi d(n, n);
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (int t = 0; t < n; ++t) {
            if (row[t] < 0)
                throw Error(errc::disconnected,
                            "no path between vertices " + std::to_string(s) + " and " + std::to_string(t));
            d(s, t) = row[t];
        }
    }
    return d;
}

int eccentricity(const Eigen::MatrixXi& dist, int v) {
    if (v < 0 || v >= dist.rows())
        throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    return dist.row(v).maxCoeff();
}

long long transmission(const Eigen::MatrixXi& dist, int v) {
    if (v < 0 || v >= dist.rows())
        throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    return dist.row(v).cast<long long>().sum();
}

Spectrum sym_eigenvalues(const Eigen::MatrixXd& m, double group_tol) {
    if (m.rows() != m.cols())
        throw Error(errc::precondition_violated, "matrix is not square");
    if (!m.allFinite())
        throw Error(errc::precondition_violated, "matrix has non-finite entries");
    if (m.rows() == 0) return Spectrum::from_values({}, group_tol);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(errc::no_convergence,
                    "eigensolver failed on a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    const auto& ev = solver.eigenvalues();
    return Spectrum::from_values({ev.data(), ev.data() + ev.size()}, group_tol);
}

Spectrum distance_spectrum(const Graph& g) {
    return sym_eigenvalues(all_pairs_distances(g).cast<double>());
}

double distance_energy(const Graph& g) {
    double e = 0.0;
    for (double v : distance_spectrum(g).values) e += std::abs(v);
    return e;
}

Eigen::Matrix4d quotient_matrix(const CveParameters& p) {
    if (!p.k1 || !p.k2 || !p.k3)
        throw Error(errc::missing_regularity, "quotient matrix needs k1, k2, k3");
    const double n1 = p.n1, m1 = p.m1, n2 = p.n2, n3 = p.n3;
    const double k1 = *p.k1, k2 = *p.k2, k3 = *p.k3;
    Eigen::Matrix4d m;
    m << n1 - 1 + k1, 2 * m1 - k1, n2, 2 * n3,
         2 * n1 - 2, 2 * m1 - 2, 2 * n2, n3,
         n1, 2 * m1, 2 * n2 - k2 - 2, 3 * n3,
         2 * n1, m1, 3 * n2, 2 * n3 - k3 - 2;
    return m;
}

namespace {

// Non-principal adjacency eigenvalues: full spectrum minus one copy of the
// regularity degree (the principal eigenvalue of a regular graph).
std::vector<double> non_principal_adjacency(const Graph& g) {
    auto spec = sym_eigenvalues(adjacency_matrix(g));
    return {spec.values.begin() + 1, spec.values.end()};
}

// The quotient of a symmetric matrix under an equitable partition satisfies
// q(i,j) * w_i = q(j,i) * w_j for the block sizes w, so it is diagonally
// similar to a symmetric matrix; eigensolve that to stay on the symmetric path.
std::vector<double> quotient_eigenvalues(const Eigen::Matrix4d& q, const CveParameters& p) {
    const double w[4] = {static_cast<double>(p.n1), static_cast<double>(p.m1),
                         static_cast<double>(p.n2), static_cast<double>(p.n3)};
    Eigen::Matrix4d s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s(i, j) = q(i, j) * std::sqrt(w[i] / w[j]);
    s = (s + s.transpose()) / 2; // clear rounding asymmetry
    return sym_eigenvalues(s).values;
}

} // namespace

Spectrum closed_form_d_spectrum(const Graph& g1, const Graph& g2, const Graph& g3) {
    auto k1 = regular_degree(g1);
    if (!k1) throw Error(errc::precondition_violated, "g1 is not regular");
    if (*k1 < 2) throw Error(errc::precondition_violated, "g1 must be k1-regular with k1 >= 2");
    if (!is_connected(g1)) throw Error(errc::precondition_violated, "g1 is not connected");
    if (!is_triangle_free(g1)) throw Error(errc::precondition_violated, "g1 is not triangle-free");
    auto k2 = regular_degree(g2);
    if (!k2 || g2.order() == 0) throw Error(errc::precondition_violated, "g2 must be regular and nonempty");
    auto k3 = regular_degree(g3);
    if (!k3 || g3.order() == 0) throw Error(errc::precondition_violated, "g3 must be regular and nonempty");

    const int n1 = g1.order(), m1 = g1.size();
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(n1) + m1 + g2.order() + g3.order());

    for (double theta : non_principal_adjacency(g1)) {
        double disc = (theta + 1) * (theta + 1) + 4 * (theta + *k1);
        double root = std::sqrt(std::max(disc, 0.0));
        vals.push_back((-3 + theta + root) / 2);
        vals.push_back((-3 + theta - root) / 2);
    }
    for (int i = 0; i < m1 - n1; ++i) vals.push_back(-2.0);
    for (double theta : non_principal_adjacency(g2)) vals.push_back(-theta - 2);
    for (double theta : non_principal_adjacency(g3)) vals.push_back(-theta - 2);

    CveParameters p = CveParameters::from_graphs(g1, g2, g3);
    for (double mu : quotient_eigenvalues(quotient_matrix(p), p)) vals.push_back(mu);

    return Spectrum::from_values(std::move(vals));
}

Spectrum line_graph_spectrum_oracle(const Graph& g) {
    auto k = regular_degree(g);
    if (!k) throw Error(errc::not_regular, "graph is not regular");
    if (g.size() == 0) throw Error(errc::no_edges, "line graph of an edgeless graph");

    const int extra = g.size() - g.order();
    std::vector<double> vals;
    vals.push_back(2.0 * *k - 2);
    for (double theta : non_principal_adjacency(g)) vals.push_back(theta + *k - 2);
    for (int i = 0; i < extra; ++i) vals.push_back(-2.0);
    // m < n only for 1-regular graphs; the surplus -2 entries come from the
    // bipartite eigenvalue -k and must be removed to land on m values.
    for (int i = 0; i < -extra; ++i) {
        auto it = std::find_if(vals.begin(), vals.end(),
                               [](double v) { return std::abs(v + 2) <= 1e-9; });
        if (it == vals.end())
            throw Error(errc::precondition_violated, "spectrum shorter than expected with no -2 to drop");
        vals.erase(it);
    }
    return Spectrum::from_values(std::move(vals));
}

double max_spectrum_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (int i = 0; i < a.dim(); ++i) dev = std::max(dev, std::abs(a.values[i] - b.values[i]));
    return dev;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    return max_spectrum_deviation(a, b) <= tol;
}

} // namespace cvejoin
