#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cvejoin/cve_join.hpp"
#include "cvejoin/graph.hpp"

namespace cvejoin {

/// Sorted real eigenvalue list with tolerance-grouped multiplicities.
struct Spectrum {
    std::vector<double> values;                  // descending
    std::vector<std::pair<double, int>> groups;  // (representative, multiplicity)

    static Spectrum from_values(std::vector<double> vals, double group_tol = 1e-6);

    int dim() const { return static_cast<int>(values.size()); }

    // Number of eigenvalues within tol of x.
    int multiplicity_near(double x, double tol) const;
};

// Shortest-path matrix via BFS from every vertex. Throws Disconnected naming
// an unreachable pair.
Eigen::MatrixXi all_pairs_distances(const Graph& g);

int eccentricity(const Eigen::MatrixXi& dist, int v);       // row max
long long transmission(const Eigen::MatrixXi& dist, int v); // row sum

// All eigenvalues of a real symmetric matrix, descending. Deterministic on
// identical input; accuracy within 1e-10 * max(1, spectral radius) for the
// dimensions this project touches (checked by the acceptance suite).
Spectrum sym_eigenvalues(const Eigen::MatrixXd& m, double group_tol = 1e-6);

Spectrum distance_spectrum(const Graph& g);
double distance_energy(const Graph& g);

// The 4x4 equitable quotient of the join's distance matrix under the block
// partition [V(G1) | I(G1) | V(G2) | V(G3)]. Needs k1, k2, k3 present.
Eigen::Matrix4d quotient_matrix(const CveParameters& p);

// Distance spectrum of the join of three regular graphs assembled from the
// operands' adjacency spectra and the quotient matrix, without building the
// join. Requires g1 connected, triangle-free, k1-regular with k1 >= 2, and
// g2, g3 regular and nonempty.
Spectrum closed_form_d_spectrum(const Graph& g1, const Graph& g2, const Graph& g3);

// Adjacency spectrum of line_graph(g) predicted from g's spectrum for regular
// g: {2k-2} u {theta_j + k - 2 : j >= 2} u {-2 with multiplicity m - n}.
// Used as a cross-check oracle against the numeric route.
Spectrum line_graph_spectrum_oracle(const Graph& g);

// Largest |a_i - b_i| over descending-sorted pairs; +infinity on dim mismatch.
double max_spectrum_deviation(const Spectrum& a, const Spectrum& b);

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

} // namespace cvejoin
