#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvejoin/cve_join.hpp"

namespace cvejoin {

/// Integer partition with every part >= 3, stored descending.
struct Partition {
    std::vector<int> parts;

    int total() const;
    std::string to_string() const; // "5+4"
};

// All partitions of a with parts >= 3, in descending lexicographic order.
std::vector<Partition> partitions_min3(int a);

// Disjoint union of cycles with the partition's lengths; 2-regular of order a.
Graph cp_graph(const Partition& p);

// One join per partition of a: central graph of h1 with the cycle union on the
// vertex side and h2 on the edge side. h1 must be connected, regular with
// k >= 2 and triangle-free; h2 regular with least adjacency eigenvalue >= -2.
// Same-order members with equal distance energy by construction.
std::vector<CveGraph> equienergetic_family(const Graph& h1, const Graph& h2, int a);

struct PairWitness {
    int i = 0, j = 0;       // member indices
    int coordinate = -1;    // first position where sorted spectra differ
    double delta = 0.0;     // |difference| there
};

struct FamilyCertificate {
    int a = 0;
    std::string h1_desc, h2_desc;
    std::vector<Partition> partitions; // filled when built via the family generator
    std::vector<double> energies;
    double energy_spread = 0.0;
    double energy_tol = 0.0;
    double cospectral_tol = 0.0;
    std::vector<std::pair<int, int>> cospectral_pairs;
    std::vector<PairWitness> witnesses; // one per non-cospectral pair
    bool pass = false; // spread within tol and no cospectral pair
};

// Distance energies, spread, and pairwise spectrum comparison of any
// uniform-order family.
FamilyCertificate certify_family(const std::vector<CveGraph>& family,
                                 double energy_tol, double cospectral_tol = 1e-6);

// equienergetic_family + certify_family, with partitions and operand
// descriptions attached.
FamilyCertificate certify_equienergetic_family(const Graph& h1, const Graph& h2, int a,
                                               double energy_tol,
                                               double cospectral_tol = 1e-6);

// The partition-independent energy contribution of the two join operands'
// non-principal eigenvalues: 2a - k2 + 2*n2 - 6, where (n2, k2) describe the
// edge-side operand. Analytic cross-check for the certification pipeline.
double variable_part_energy(int a, int k2, int n2);

} // namespace cvejoin
