#include "cvejoin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "cvejoin/cve_join.hpp"
#include "cvejoin/equienergetic.hpp"
#include "cvejoin/graph.hpp"
#include "cvejoin/spectral.hpp"
#include "cvejoin/topo_indices.hpp"

namespace cvejoin {

namespace {

// Mutation targets: 1 quotient(0,0); 2..10 the nine index closed forms in
// report order (wiener, xi_c, xi_ce, tau, aveg, M1, M2, GA4, ABC5); 11 the
// variable-part energy identity.
constexpr int kMutations = 11;

struct Triple {
    std::string name;
    Graph g1, g2, g3;
};

std::vector<Triple> spectrum_triples() {
    return {
        {"C4 | K2,K2", cycle(4), complete(2), complete(2)},
        {"C6 | C3,K2", cycle(6), cycle(3), complete(2)},
        {"K3,3 | C4,C5", complete_bipartite(3, 3), cycle(4), cycle(5)},
        {"Petersen | K3,C4", petersen(), complete(3), cycle(4)},
    };
}

std::vector<Triple> index_triples() {
    return {
        {"C4 | K2,K2", cycle(4), complete(2), complete(2)},
        {"C6 | C3,K2", cycle(6), cycle(3), complete(2)},
        {"K3,3 | C4,C5", complete_bipartite(3, 3), cycle(4), cycle(5)},
        {"K4 | K2,K2", complete(4), complete(2), complete(2)},
        {"K3 | C3,K2", complete(3), cycle(3), complete(2)},
    };
}

// Closed-form D-spectrum with the quotient's (0,0) coefficient bumped by +1;
// only used as the negative control for mutation 1.
Spectrum perturbed_closed_form(const Graph& g1, const Graph& g2, const Graph& g3) {
    auto k1 = *regular_degree(g1);
    auto adj_tail = [](const Graph& g) {
        auto s = sym_eigenvalues(adjacency_matrix(g));
        return std::vector<double>(s.values.begin() + 1, s.values.end());
    };
    std::vector<double> vals;
    for (double theta : adj_tail(g1)) {
        double root = std::sqrt(std::max((theta + 1) * (theta + 1) + 4 * (theta + k1), 0.0));
        vals.push_back((-3 + theta + root) / 2);
        vals.push_back((-3 + theta - root) / 2);
    }
    for (int i = 0; i < g1.size() - g1.order(); ++i) vals.push_back(-2.0);
    for (double theta : adj_tail(g2)) vals.push_back(-theta - 2);
    for (double theta : adj_tail(g3)) vals.push_back(-theta - 2);
    Eigen::Matrix4d q = quotient_matrix(CveParameters::from_graphs(g1, g2, g3));
    q(0, 0) += 1.0;
    Eigen::EigenSolver<Eigen::Matrix4d> qs(q);
    for (int i = 0; i < 4; ++i) vals.push_back(qs.eigenvalues()[i].real());
    return Spectrum::from_values(std::move(vals));
}

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void check_spectrum_triples(std::vector<CheckResult>& out, int mutation) {
    for (const auto& t : spectrum_triples()) {
        auto join = cve_join(t.g1, t.g2, t.g3);
        auto numeric = distance_spectrum(join.graph);
        auto closed = mutation == 1 ? perturbed_closed_form(t.g1, t.g2, t.g3)
                                    : closed_form_d_spectrum(t.g1, t.g2, t.g3);
        double dev = max_spectrum_deviation(closed, numeric);
        out.push_back({"d-spectrum closed form vs numeric [" + t.name + "]", dev <= 1e-8, dev,
                       1e-8, "order " + std::to_string(join.graph.order())});
    }
}

void check_minus_two_multiplicity(std::vector<CheckResult>& out) {
    for (const auto& t : spectrum_triples()) {
        int surplus = t.g1.size() - t.g1.order();
        if (surplus <= 0) continue; // only the K3,3 and Petersen instances
        auto join = cve_join(t.g1, t.g2, t.g3);
        int mult = distance_spectrum(join.graph).multiplicity_near(-2.0, 1e-6);
        out.push_back({"-2 multiplicity >= m1-n1 [" + t.name + "]", mult >= surplus,
                       static_cast<double>(std::max(surplus - mult, 0)), 0.0,
                       "multiplicity " + std::to_string(mult) + ", required " +
                           std::to_string(surplus)});
    }
}

void check_line_graph_oracle(std::vector<CheckResult>& out) {
    const std::pair<std::string, Graph> cases[] = {
        {"C4", cycle(4)}, {"K4", complete(4)}, {"K3,3", complete_bipartite(3, 3)},
        {"Petersen", petersen()}};
    for (const auto& [name, g] : cases) {
        auto predicted = line_graph_spectrum_oracle(g);
        auto numeric = sym_eigenvalues(adjacency_matrix(line_graph(g)));
        double dev = max_spectrum_deviation(predicted, numeric);
        out.push_back({"line graph spectrum oracle [" + name + "]", dev <= 1e-9, dev, 1e-9, ""});
    }
}

void check_equienergetic_families(std::vector<CheckResult>& out, int mutation) {
    Graph h1 = cycle(4), h2 = complete(2);
    for (int a = 3; a <= 12; ++a) {
        auto family = equienergetic_family(h1, h2, a);
        const double energy_tol = 1e-8 * family.front().graph.order();
        auto cert = certify_family(family, energy_tol, 1e-6);
        std::ostringstream detail;
        detail << family.size() << " members, spread " << format_double(cert.energy_spread)
               << ", " << cert.cospectral_pairs.size() << " cospectral pairs";
        out.push_back({"equienergetic family a=" + std::to_string(a), cert.pass,
                       cert.energy_spread, energy_tol, detail.str()});

        // partition-independent part of the energy, cross-checked per member
        double expected = variable_part_energy(a, *regular_degree(h2), h2.order()) +
                          (mutation == 11 ? 1.0 : 0.0);
        double worst = 0.0;
        for (const auto& p : partitions_min3(a)) {
            auto cp_spec = sym_eigenvalues(adjacency_matrix(cp_graph(p)));
            auto h2_spec = sym_eigenvalues(adjacency_matrix(h2));
            double sum = 0.0;
            for (std::size_t i = 1; i < cp_spec.values.size(); ++i)
                sum += std::abs(-cp_spec.values[i] - 2);
            for (std::size_t i = 1; i < h2_spec.values.size(); ++i)
                sum += std::abs(-h2_spec.values[i] - 2);
            worst = std::max(worst, std::abs(sum - expected));
        }
        out.push_back({"variable-part energy identity a=" + std::to_string(a), worst <= 1e-9,
                       worst, 1e-9, ""});
    }
}

void check_index_closed_forms(std::vector<CheckResult>& out, int mutation) {
    for (const auto& t : index_triples()) {
        auto v = verify_indices(t.g1, t.g2, t.g3);
        double worst = 0.0;
        bool pass = v.pass;
        for (const auto& c : v.checks)
            if (c.closed_form_available) worst = std::max(worst, c.difference);

        if (mutation >= 2 && mutation <= 10) {
            // redo the targeted comparison with the closed-form value bumped by 1
            auto join = cve_join(t.g1, t.g2, t.g3);
            auto def = indices_definitional(join.graph);
            const auto& p = join.params;
            const bool tf = join.g1_triangle_free;
            try {
                bool ok = true;
                switch (mutation) {
                    case 2: ok = Rational(wiener_closed_form(p, tf) + 1) == def.wiener; break;
                    case 3: ok = Rational(xi_c_closed_form(p, tf) + 1) == def.xi_c; break;
                    case 4: ok = xi_ce_closed_form(p, tf) + Rational(1) == def.xi_ce; break;
                    case 5: ok = Rational(tau_closed_form(p, tf) + 1) == def.tau; break;
                    case 6: ok = aveg_closed_form(p, tf) + Rational(1) == def.aveg; break;
                    case 7: ok = Rational(zagreb_closed_form(p, tf).first + 1) == def.zagreb_m1; break;
                    case 8: ok = Rational(zagreb_closed_form(p, tf).second + 1) == def.zagreb_m2; break;
                    case 9: ok = std::abs(ga4_closed_form(p, tf) + 1 - def.ga4) <= 1e-9; break;
                    case 10: ok = std::abs(abc5_closed_form(p, tf) + 1 - def.abc5) <= 1e-9; break;
                }
                if (!ok) {
                    pass = false;
                    worst = std::max(worst, 1.0);
                }
            } catch (const Error& e) {
                if (e.code() != errc::closed_form_unavailable &&
                    e.code() != errc::missing_regularity)
                    throw; // unavailable on this triple: mutation lands elsewhere
            }
        }
        out.push_back({"index closed forms [" + t.name + "]", pass, worst, 1e-9,
                       v.triangle_free_branch ? "triangle-free branch" : "otherwise branch"});
    }
}

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}
    int below(int n) { return static_cast<int>(gen_() % static_cast<unsigned>(n)); }
    bool coin(double p) { return (gen_() % 1000000u) < p * 1000000u; }

private:
    std::mt19937 gen_;
};

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph random_connected_triangle_free(Rng& rng, int n) {
    if (n == 2) return complete(2);
    for (;;) {
        Graph g = random_graph(rng, n, 0.4);
        if (g.size() >= 1 && is_connected(g) && is_triangle_free(g)) return g;
    }
}

void check_structural_identities(std::vector<CheckResult>& out, int trials) {
    Rng rng(20240915u);
    int failures = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
        Graph g1;
        int pick = rng.below(10);
        if (pick == 0) g1 = complete(3);
        else if (pick == 1) g1 = complete(4);
        else g1 = random_connected_triangle_free(rng, 2 + rng.below(6));
        Graph g2 = random_graph(rng, 1 + rng.below(6), 0.5);
        Graph g3 = random_graph(rng, 1 + rng.below(6), 0.5);

        auto join = cve_join(g1, g2, g3);
        auto note = [&](const std::string& what) {
            ++failures;
            if (first_failure.empty()) first_failure = what + " at trial " + std::to_string(t);
        };

        if (cve_order(join.params) != join.graph.order()) note("order formula");
        if (cve_size(join.params) != join.graph.size()) note("size formula");

        long long degree_sum = 0;
        for (int v = 0; v < join.graph.order(); ++v) {
            if (cve_degree(join, v) != join.graph.degree(v)) note("degree formula");
            degree_sum += join.graph.degree(v);
        }
        if (degree_sum != 2 * cve_size(join.params)) note("handshake");

        auto dist = all_pairs_distances(join.graph);
        if (dist.maxCoeff() > 3) note("diameter bound");
        for (int v = 0; v < join.graph.order(); ++v)
            if (cve_eccentricity(join, v) != eccentricity(dist, v)) note("eccentricity formula");
    }
    out.push_back({"structural identities, " + std::to_string(trials) + " random joins",
                   failures == 0, static_cast<double>(failures), 0.0,
                   failures ? first_failure : "all formulas match construction"});
}

void check_eigensolver_accuracy(std::vector<CheckResult>& out, int max_dim) {
    double worst = 0.0;
    auto record = [&](const Spectrum& got, std::vector<double> expected) {
        std::sort(expected.begin(), expected.end(), std::greater<>());
        double radius = std::max(std::abs(expected.front()), std::abs(expected.back()));
        double err = 0.0;
        for (int i = 0; i < got.dim(); ++i)
            err = std::max(err, std::abs(got.values[i] - expected[i]));
        worst = std::max(worst, err / std::max(1.0, radius));
    };

    for (int n : {5, 50, 200, max_dim}) {
        record(sym_eigenvalues(adjacency_matrix(complete(n))),
               [&] {
                   std::vector<double> e(n, -1.0);
                   e[0] = n - 1.0;
                   return e;
               }());
    }
    for (int n : {4, 101, max_dim}) {
        std::vector<double> e(n);
        for (int j = 0; j < n; ++j) e[j] = 2.0 * std::cos(2.0 * std::numbers::pi * j / n);
        record(sym_eigenvalues(adjacency_matrix(cycle(n))), e);
    }
    for (int n : {100, max_dim}) {
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
        std::vector<double> e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = std::pow(-1.0, i) * i * 0.5;
            d(i, i) = e[i];
        }
        record(sym_eigenvalues(d), e);
    }
    out.push_back({"eigensolver accuracy on known spectra, dim <= " + std::to_string(max_dim),
                   worst <= 1e-10, worst, 1e-10, "max error normalized by max(1, spectral radius)"});
}

} // namespace

int mutation_count() { return kMutations; }

VerifyReport run_verification_suite(const VerifyOptions& opts) {
    VerifyReport report;
    check_spectrum_triples(report.checks, opts.mutation);
    check_minus_two_multiplicity(report.checks);
    check_line_graph_oracle(report.checks);
    check_equienergetic_families(report.checks, opts.mutation);
    check_index_closed_forms(report.checks, opts.mutation);
    check_structural_identities(report.checks, opts.random_trials);
    check_eigensolver_accuracy(report.checks, opts.max_eigensolver_dim);

    report.all_pass = true;
    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace cvejoin
