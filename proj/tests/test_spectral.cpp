#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cvejoin/cve_join.hpp"
#include "cvejoin/spectral.hpp"

using namespace cvejoin;

namespace {

void check_values(const Spectrum& s, const std::vector<double>& expected, double tol = 1e-12) {
    REQUIRE(s.dim() == static_cast<int>(expected.size()));
    for (int i = 0; i < s.dim(); ++i)
        CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(tol));
}

} // namespace

TEST_CASE("all-pairs distances") {
    auto d4 = all_pairs_distances(cycle(4));
    for (int v = 0; v < 4; ++v) {
        std::vector<int> row{d4(v, 0), d4(v, 1), d4(v, 2), d4(v, 3)};
        std::sort(row.begin(), row.end());
        CHECK(row == std::vector<int>{0, 1, 1, 2});
    }

    auto d3 = all_pairs_distances(complete(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d3(i, j) == (i == j ? 0 : 1));

    auto join = cve_join(cycle(4), complete(2), complete(2));
    CHECK(all_pairs_distances(join.graph).maxCoeff() == 3);

    CHECK_THROWS_WITH_AS(all_pairs_distances(disjoint_union({cycle(3), cycle(3)})),
                         doctest::Contains("Disconnected"), Error);
    try {
        all_pairs_distances(disjoint_union({cycle(3), cycle(3)}));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos); // names the vertices
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("distance matrix invariants") {
    for (const auto& g : {cycle(7), petersen(), complete_bipartite(2, 4),
                          cve_join(cycle(4), complete(2), complete(2)).graph}) {
        auto d = all_pairs_distances(g);
        const int n = g.order();
        for (int i = 0; i < n; ++i) {
            CHECK(d(i, i) == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(d(i, j) == d(j, i));
                CHECK((d(i, j) == 1) == (i != j && g.adjacent(i, j)));
                for (int k = 0; k < n; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k));
            }
        }
    }
}

TEST_CASE("eccentricity and transmission") {
    auto d4 = all_pairs_distances(cycle(4));
    for (int v = 0; v < 4; ++v) {
        CHECK(eccentricity(d4, v) == 2);
        CHECK(transmission(d4, v) == 4);
    }

    auto d2 = all_pairs_distances(complete(2));
    CHECK(eccentricity(d2, 0) == 1);
    CHECK(transmission(d2, 0) == 1);

    // vertex 8 is the first V(G2) vertex of the 12-vertex instance
    auto join = cve_join(cycle(4), complete(2), complete(2));
    auto d = all_pairs_distances(join.graph);
    CHECK(transmission(d, 8) == 19);

    CHECK_THROWS_AS(eccentricity(d4, 4), Error);
    CHECK_THROWS_AS(transmission(d4, -1), Error);
}

TEST_CASE("symmetric eigensolver on known matrices") {
    check_values(sym_eigenvalues(Eigen::MatrixXd::Zero(3, 3)), {0, 0, 0});
    check_values(sym_eigenvalues(adjacency_matrix(complete(4))), {3, -1, -1, -1});
    check_values(sym_eigenvalues(adjacency_matrix(cycle(4))), {2, 0, 0, -2});

    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 1) = bad(1, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sym_eigenvalues(bad), Error);
    CHECK_THROWS_AS(sym_eigenvalues(Eigen::MatrixXd::Zero(2, 3)), Error);
}

TEST_CASE("eigensolver is deterministic") {
    auto m = adjacency_matrix(petersen());
    auto a = sym_eigenvalues(m);
    auto b = sym_eigenvalues(m);
    CHECK(a.values == b.values); // bitwise identical
}

TEST_CASE("spectrum grouping") {
    auto s = Spectrum::from_values({1.0, 1.0 + 1e-9, -2.0, -2.0, 0.5}, 1e-6);
    REQUIRE(s.groups.size() == 3);
    CHECK(s.groups[0].second == 2);
    CHECK(s.groups[1] == std::pair<double, int>{0.5, 1});
    CHECK(s.groups[2].second == 2);
    CHECK(s.multiplicity_near(-2.0, 1e-6) == 2);
    CHECK(s.multiplicity_near(1.0, 1e-6) == 2);
}

TEST_CASE("spectrum invariants: descending values, multiplicities sum to dim") {
    for (const auto& g : {cycle(5), petersen(), complete_bipartite(2, 4),
                          cve_join(cycle(6), cycle(3), complete(2)).graph}) {
        auto s = distance_spectrum(g);
        CHECK(s.dim() == g.order());
        CHECK(std::is_sorted(s.values.begin(), s.values.end(), std::greater<>()));
        int total = 0;
        for (const auto& [rep, mult] : s.groups) total += mult;
        CHECK(total == s.dim());
    }
}

TEST_CASE("distance spectra and energy of small graphs") {
    check_values(distance_spectrum(complete(2)), {1, -1});
    check_values(distance_spectrum(complete(3)), {2, -1, -1});
    check_values(distance_spectrum(cycle(4)), {4, 0, -2, -2});

    CHECK(distance_energy(complete(2)) == doctest::Approx(2).epsilon(1e-12));
    CHECK(distance_energy(complete(3)) == doctest::Approx(4).epsilon(1e-12));
    CHECK(distance_energy(cycle(4)) == doctest::Approx(8).epsilon(1e-12));

    CHECK_THROWS_AS(distance_spectrum(disjoint_union({cycle(3), cycle(3)})), Error);
}

TEST_CASE("trace and Frobenius identities of distance spectra") {
    for (const auto& g : {cycle(5), petersen(), complete_bipartite(2, 4),
                          cve_join(cycle(4), complete(2), complete(2)).graph}) {
        auto spec = distance_spectrum(g);
        double sum = 0, sum_sq = 0;
        for (double v : spec.values) {
            sum += v;
            sum_sq += v * v;
        }
        CHECK(std::abs(sum) <= 1e-8 * g.order());
        double frob = all_pairs_distances(g).cast<double>().squaredNorm();
        CHECK(sum_sq == doctest::Approx(frob).epsilon(1e-6));
    }
}

TEST_CASE("quotient matrix entries and equitability") {
    auto q = quotient_matrix(CveParameters::from_graphs(cycle(4), complete(2), complete(2)));
    Eigen::Matrix4d expected;
    expected << 5, 6, 2, 4, 6, 6, 4, 2, 4, 8, 1, 6, 8, 4, 6, 1;
    CHECK(q == expected);

    auto q2 = quotient_matrix(
        CveParameters::from_graphs(complete_bipartite(3, 3), cycle(3), complete(2)));
    Eigen::Matrix4d expected2;
    expected2 << 8, 15, 3, 4, 10, 16, 6, 2, 6, 18, 2, 6, 12, 9, 9, 1;
    CHECK(q2 == expected2);

    // each quotient row sum equals the constant block row sum of the distance matrix
    for (const auto& [g1, g2, g3] :
         {std::tuple{cycle(4), complete(2), complete(2)},
          std::tuple{complete_bipartite(3, 3), cycle(3), complete(2)}}) {
        auto join = cve_join(g1, g2, g3);
        auto qm = quotient_matrix(join.params);
        auto dist = all_pairs_distances(join.graph);
        for (int bi = 0; bi < 4; ++bi) {
            auto [lo, hi] = join.blocks[bi];
            for (int v = lo; v < hi; ++v) {
                for (int bj = 0; bj < 4; ++bj) {
                    long long block_sum = 0;
                    for (int w = join.blocks[bj].first; w < join.blocks[bj].second; ++w)
                        block_sum += dist(v, w);
                    CHECK(static_cast<double>(block_sum) == qm(bi, bj));
                }
            }
        }
    }

    CHECK_THROWS_WITH_AS(quotient_matrix(CveParameters::from_graphs(
                             Graph(3, {{0, 1}}), complete(2), complete(2))),
                         doctest::Contains("MissingRegularity"), Error);
}

TEST_CASE("closed-form distance spectrum of the 12-vertex instance") {
    auto closed = closed_form_d_spectrum(cycle(4), complete(2), complete(2));
    REQUIRE(closed.dim() == 12);

    // the eight non-quotient values: theta pairs {0,-3},{0,-3},{-2,-3} plus -1,-1
    std::vector<double> fixed{0, 0, -1, -1, -2, -3, -3, -3};
    for (double x : fixed) CHECK(closed.multiplicity_near(x, 1e-9) >= 1);

    auto numeric = distance_spectrum(cve_join(cycle(4), complete(2), complete(2)).graph);
    CHECK(max_spectrum_deviation(closed, numeric) <= 1e-8);
}

TEST_CASE("closed form equals the numeric spectrum for every suite triple") {
    const std::tuple<Graph, Graph, Graph> triples[] = {
        {cycle(4), complete(2), complete(2)},
        {cycle(6), cycle(3), complete(2)},
        {complete_bipartite(3, 3), cycle(4), cycle(5)},
        {petersen(), complete(3), cycle(4)},
        {cycle(5), complete_bipartite(2, 2), complete(4)},
        {complete_bipartite(3, 3), cycle(3), complete(2)},
    };
    for (const auto& [g1, g2, g3] : triples) {
        auto closed = closed_form_d_spectrum(g1, g2, g3);
        auto numeric = distance_spectrum(cve_join(g1, g2, g3).graph);
        CHECK(max_spectrum_deviation(closed, numeric) <= 1e-8);

        // grouped multiplicity of -2 is at least m1 - n1
        CHECK(numeric.multiplicity_near(-2.0, 1e-6) >= g1.size() - g1.order());
    }
}

TEST_CASE("closed-form preconditions are named") {
    auto k2 = complete(2), k4 = complete(4), c4 = cycle(4);
    CHECK_THROWS_WITH_AS(closed_form_d_spectrum(k4, k2, k2), doctest::Contains("triangle"), Error);
    CHECK_THROWS_WITH_AS(closed_form_d_spectrum(k2, k2, k2), doctest::Contains("k1 >= 2"), Error);
    CHECK_THROWS_WITH_AS(closed_form_d_spectrum(Graph(3, {{0, 1}}), k2, k2),
                         doctest::Contains("not regular"), Error);
    CHECK_THROWS_WITH_AS(closed_form_d_spectrum(disjoint_union({c4, c4}), k2, k2),
                         doctest::Contains("connected"), Error);
    CHECK_THROWS_WITH_AS(closed_form_d_spectrum(c4, Graph(3, {{0, 1}}), k2),
                         doctest::Contains("g2"), Error);
}

TEST_CASE("line graph spectrum oracle") {
    check_values(line_graph_spectrum_oracle(cycle(4)), {2, 0, 0, -2});
    check_values(line_graph_spectrum_oracle(complete(4)), {4, 0, 0, 0, -2, -2});
    check_values(line_graph_spectrum_oracle(complete(2)), {0}); // L(K2) = K1

    auto pet = line_graph_spectrum_oracle(petersen());
    CHECK(pet.dim() == 15);
    CHECK(pet.multiplicity_near(-2.0, 1e-9) == 5);

    for (const auto& g : {cycle(4), complete(4), complete_bipartite(3, 3), petersen()}) {
        auto numeric = sym_eigenvalues(adjacency_matrix(line_graph(g)));
        CHECK(max_spectrum_deviation(line_graph_spectrum_oracle(g), numeric) <= 1e-9);
    }

    CHECK_THROWS_WITH_AS(line_graph_spectrum_oracle(Graph(3, {{0, 1}})),
                         doctest::Contains("NotRegular"), Error);
}

TEST_CASE("spectra comparison") {
    auto s = distance_spectrum(cycle(4));
    CHECK(spectra_equal(s, s, 0.0));
    CHECK_FALSE(spectra_equal(distance_spectrum(cycle(4)), distance_spectrum(complete(4)), 1e-6));

    auto cp1 = disjoint_union({cycle(6), cycle(3)});
    auto cp2 = disjoint_union({cycle(5), cycle(4)});
    auto a = distance_spectrum(cve_join(cycle(4), cp1, complete(2)).graph);
    auto b = distance_spectrum(cve_join(cycle(4), cp2, complete(2)).graph);
    CHECK_FALSE(spectra_equal(a, b, 1e-6));
    CHECK(std::isinf(max_spectrum_deviation(distance_spectrum(cycle(4)),
                                            distance_spectrum(cycle(5)))));
}
