#include "cvejoin/equienergetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cvejoin/spectral.hpp"

namespace cvejoin {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

namespace {

void extend_partition(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 3; --p) {
        if (remaining - p != 0 && remaining - p < 3) continue;
        prefix.push_back(p);
        extend_partition(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

std::string graph_desc(const Graph& g) {
    std::string s = std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges";
    if (auto k = regular_degree(g)) s += ", " + std::to_string(*k) + "-regular";
    return s;
}

} // namespace

std::vector<Partition> partitions_min3(int a) {
    if (a < 3)
        throw Error(errc::too_small, "partitions with parts >= 3 need a >= 3, got " + std::to_string(a));
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partition(a, a, prefix, out); // descending parts => descending-lex order
    return out;
}

Graph cp_graph(const Partition& p) {
    std::vector<Graph> cycles;
    cycles.reserve(p.parts.size());
    for (int len : p.parts) cycles.push_back(cycle(len));
    return disjoint_union(cycles);
}

std::vector<CveGraph> equienergetic_family(const Graph& h1, const Graph& h2, int a) {
    auto k1 = regular_degree(h1);
    if (!k1 || *k1 < 2 || !is_connected(h1) || !is_triangle_free(h1))
        throw Error(errc::h1_not_eligible,
                    "h1 must be connected, triangle-free, and k-regular with k >= 2");
    if (!regular_degree(h2) || h2.order() == 0)
        throw Error(errc::h2_least_eig_too_small, "h2 must be regular and nonempty");
    auto h2_spec = sym_eigenvalues(adjacency_matrix(h2));
    double least = h2_spec.values.back();
    if (least < -2.0 - 1e-8)
        throw Error(errc::h2_least_eig_too_small,
                    "least adjacency eigenvalue of h2 is " + std::to_string(least));

    std::vector<CveGraph> family;
    for (const auto& p : partitions_min3(a)) family.push_back(cve_join(h1, cp_graph(p), h2));
    return family;
}

FamilyCertificate certify_family(const std::vector<CveGraph>& family, double energy_tol,
                                 double cospectral_tol) {
    if (family.empty()) throw Error(errc::empty_list, "cannot certify an empty family");
    const int order = family.front().graph.order();
    for (const auto& g : family)
        if (g.graph.order() != order)
            throw Error(errc::mixed_orders, "family members differ in order");

    FamilyCertificate cert;
    cert.energy_tol = energy_tol;
    cert.cospectral_tol = cospectral_tol;

    std::vector<Spectrum> spectra;
    spectra.reserve(family.size());
    for (const auto& g : family) {
        spectra.push_back(distance_spectrum(g.graph));
        double e = 0.0;
        for (double v : spectra.back().values) e += std::abs(v);
        cert.energies.push_back(e);
    }
    auto [lo, hi] = std::minmax_element(cert.energies.begin(), cert.energies.end());
    cert.energy_spread = *hi - *lo;

    for (std::size_t i = 0; i < spectra.size(); ++i)
        for (std::size_t j = i + 1; j < spectra.size(); ++j) {
            PairWitness w;
            w.i = static_cast<int>(i);
            w.j = static_cast<int>(j);
            for (int t = 0; t < spectra[i].dim(); ++t) {
                double d = std::abs(spectra[i].values[t] - spectra[j].values[t]);
                if (d > cospectral_tol) {
                    w.coordinate = t;
                    w.delta = d;
                    break;
                }
            }
            if (w.coordinate < 0)
                cert.cospectral_pairs.emplace_back(w.i, w.j);
            else
                cert.witnesses.push_back(w);
        }

    cert.pass = cert.energy_spread <= energy_tol && cert.cospectral_pairs.empty();
    return cert;
}

FamilyCertificate certify_equienergetic_family(const Graph& h1, const Graph& h2, int a,
                                               double energy_tol, double cospectral_tol) {
    auto family = equienergetic_family(h1, h2, a);
    auto cert = certify_family(family, energy_tol, cospectral_tol);
    cert.a = a;
    cert.partitions = partitions_min3(a);
    cert.h1_desc = graph_desc(h1);
    cert.h2_desc = graph_desc(h2);
    return cert;
}

double variable_part_energy(int a, int k2, int n2) {
    if (a < 3) throw Error(errc::too_small, "needs a >= 3, got " + std::to_string(a));
    return 2.0 * a - k2 + 2.0 * n2 - 6.0;
}

} // namespace cvejoin
