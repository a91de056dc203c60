#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvejoin/cve_join.hpp"
#include "cvejoin/edge_list.hpp"
#include "cvejoin/equienergetic.hpp"
#include "cvejoin/graph.hpp"
#include "cvejoin/spectral.hpp"
#include "cvejoin/topo_indices.hpp"
#include "cvejoin/verify.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void emit(const std::string& text, const json& j, bool as_json, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw cvejoin::Error(cvejoin::errc::io_error, "cannot write \"" + out_path + "\"");
        os = &file;
    }
    if (as_json)
        *os << j.dump(2) << "\n";
    else
        *os << text;
}

json spectrum_json(const cvejoin::Spectrum& s) {
    json j;
    j["values"] = s.values;
    json groups = json::array();
    for (const auto& [rep, mult] : s.groups) groups.push_back({{"value", rep}, {"multiplicity", mult}});
    j["groups"] = groups;
    return j;
}

void print_spectrum(std::ostream& os, const cvejoin::Spectrum& s) {
    os << "  values:";
    for (double v : s.values) os << " " << fmt(v);
    os << "\n  grouped:";
    for (const auto& [rep, mult] : s.groups) os << " " << fmt(rep) << " (x" << mult << ")";
    os << "\n";
}

int cmd_construct(const std::vector<std::string>& inputs, const std::string& out_path) {
    auto g1 = cvejoin::load_graph(inputs[0]);
    auto g2 = cvejoin::load_graph(inputs[1]);
    auto g3 = cvejoin::load_graph(inputs[2]);
    auto join = cvejoin::cve_join(g1, g2, g3);

    std::vector<std::string> header;
    header.push_back("cve-join of " + inputs[0] + " | " + inputs[1] + " | " + inputs[2]);
    std::ostringstream blocks;
    blocks << "blocks: V(G1)=[" << join.blocks[0].first << "," << join.blocks[0].second
           << ") I(G1)=[" << join.blocks[1].first << "," << join.blocks[1].second
           << ") V(G2)=[" << join.blocks[2].first << "," << join.blocks[2].second
           << ") V(G3)=[" << join.blocks[3].first << "," << join.blocks[3].second << ")";
    header.push_back(blocks.str());

    if (out_path.empty()) {
        cvejoin::write_edge_list(std::cout, join.graph, header);
    } else {
        std::ofstream file(out_path);
        if (!file) throw cvejoin::Error(cvejoin::errc::io_error, "cannot write \"" + out_path + "\"");
        cvejoin::write_edge_list(file, join.graph, header);
        std::cout << "wrote " << out_path << " (order " << join.graph.order() << ", size "
                  << join.graph.size() << ")\n";
    }
    return kExitOk;
}

int cmd_spectrum(const std::vector<std::string>& inputs, bool closed_form, double tol,
                 bool as_json, const std::string& out_path) {
    std::ostringstream text;
    json j;
    j["command"] = "spectrum";
    j["inputs"] = inputs;
    int exit_code = kExitOk;

    cvejoin::Graph target;
    if (inputs.size() == 1) {
        if (closed_form)
            throw cvejoin::Error(cvejoin::errc::precondition_violated,
                                 "--closed-form needs three input graphs");
        target = cvejoin::load_graph(inputs[0]);
        text << "graph: " << inputs[0] << " (order " << target.order() << ", size "
             << target.size() << ")\n";
    } else {
        auto g1 = cvejoin::load_graph(inputs[0]);
        auto g2 = cvejoin::load_graph(inputs[1]);
        auto g3 = cvejoin::load_graph(inputs[2]);
        auto join = cvejoin::cve_join(g1, g2, g3);
        target = join.graph;
        text << "cve-join: " << inputs[0] << " | " << inputs[1] << " | " << inputs[2]
             << " (order " << target.order() << ", size " << target.size() << ")\n";

        if (closed_form) {
            auto closed = cvejoin::closed_form_d_spectrum(g1, g2, g3);
            auto numeric = cvejoin::distance_spectrum(target);
            double dev = cvejoin::max_spectrum_deviation(closed, numeric);
            bool pass = dev <= tol;
            exit_code = pass ? kExitOk : kExitVerifyFail;

            auto q = cvejoin::quotient_matrix(cvejoin::CveParameters::from_graphs(g1, g2, g3));
            text << "quotient matrix:\n";
            for (int r = 0; r < 4; ++r) {
                text << "  [";
                for (int c = 0; c < 4; ++c) text << (c ? ", " : "") << fmt(q(r, c));
                text << "]\n";
            }
            text << "closed-form multiset:\n";
            print_spectrum(text, closed);
            text << "max multiset deviation: " << fmt(dev) << " (tol " << fmt(tol) << ") -> "
                 << (pass ? "PASS" : "FAIL") << "\n";

            j["closed_form"] = spectrum_json(closed);
            j["quotient_matrix"] = {{q(0, 0), q(0, 1), q(0, 2), q(0, 3)},
                                    {q(1, 0), q(1, 1), q(1, 2), q(1, 3)},
                                    {q(2, 0), q(2, 1), q(2, 2), q(2, 3)},
                                    {q(3, 0), q(3, 1), q(3, 2), q(3, 3)}};
            j["max_deviation"] = dev;
            j["tolerance"] = tol;
            j["pass"] = pass;
        }
    }

    auto spec = cvejoin::distance_spectrum(target);
    double energy = 0.0;
    for (double v : spec.values) energy += std::abs(v);
    text << "d-spectrum:\n";
    print_spectrum(text, spec);
    text << "d-energy: " << fmt(energy) << "\n";
    j["spectrum"] = spectrum_json(spec);
    j["energy"] = energy;

    emit(text.str(), j, as_json, out_path);
    return exit_code;
}

int cmd_indices(const std::vector<std::string>& inputs, bool as_json, const std::string& out_path) {
    auto g1 = cvejoin::load_graph(inputs[0]);
    auto g2 = cvejoin::load_graph(inputs[1]);
    auto g3 = cvejoin::load_graph(inputs[2]);
    auto v = cvejoin::verify_indices(g1, g2, g3);

    std::ostringstream text;
    text << "branch: " << (v.triangle_free_branch ? "triangle-free" : "otherwise") << "\n";
    text << "index      definitional        closed-form         |difference|     status\n";
    json rows = json::array();
    for (const auto& c : v.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%-10s %-19s %-19s %-16s %s\n", c.name.c_str(),
                      c.definitional.c_str(), c.closed_form.c_str(),
                      c.closed_form_available ? fmt(c.difference).c_str() : "-",
                      c.pass ? (c.closed_form_available ? "pass" : "pass (definitional only)")
                             : "FAIL");
        text << line;
        rows.push_back({{"index", c.name},
                        {"exact", c.exact},
                        {"definitional", c.definitional},
                        {"closed_form", c.closed_form},
                        {"closed_form_available", c.closed_form_available},
                        {"difference", c.difference},
                        {"pass", c.pass}});
    }
    text << "tolerance: exact match for rational indices, 1e-09 absolute for GA4/ABC5\n";
    text << (v.pass ? "all index checks pass\n" : "INDEX CHECKS FAILED\n");

    json j;
    j["command"] = "indices";
    j["inputs"] = inputs;
    j["branch"] = v.triangle_free_branch ? "triangle-free" : "otherwise";
    j["rows"] = rows;
    j["pass"] = v.pass;

    emit(text.str(), j, as_json, out_path);
    return v.pass ? kExitOk : kExitVerifyFail;
}

int cmd_equienergetic(const std::string& h1_spec, const std::string& h2_spec, int a, double tol,
                      bool as_json, const std::string& out_path) {
    auto h1 = cvejoin::load_graph(h1_spec);
    auto h2 = cvejoin::load_graph(h2_spec);
    const long long order = cvejoin::cve_order(cvejoin::CveParameters::from_graphs(
                                h1, cvejoin::Graph(a, {}), h2));
    auto cert = cvejoin::certify_equienergetic_family(h1, h2, a, tol * order);

    std::ostringstream text;
    text << "family: central graph of " << h1_spec << " joined with cycle unions of " << a
         << " vertices and " << h2_spec << "\n";
    text << "h1: " << cert.h1_desc << "\nh2: " << cert.h2_desc << "\n";
    json members = json::array();
    for (std::size_t i = 0; i < cert.partitions.size(); ++i) {
        text << "  member " << i << ": partition " << cert.partitions[i].to_string()
             << ", d-energy " << fmt(cert.energies[i]) << "\n";
        members.push_back({{"partition", cert.partitions[i].parts},
                           {"energy", cert.energies[i]}});
    }
    text << "energy spread: " << fmt(cert.energy_spread) << " (tol " << fmt(cert.energy_tol)
         << ")\n";
    json witnesses = json::array();
    for (const auto& w : cert.witnesses) {
        text << "  members " << w.i << "," << w.j << " differ at coordinate " << w.coordinate
             << " by " << fmt(w.delta) << "\n";
        witnesses.push_back(
            {{"i", w.i}, {"j", w.j}, {"coordinate", w.coordinate}, {"delta", w.delta}});
    }
    for (const auto& [i, jdx] : cert.cospectral_pairs)
        text << "  members " << i << "," << jdx << " are D-cospectral at tol "
             << fmt(cert.cospectral_tol) << "\n";
    text << (cert.pass ? "PASS" : "FAIL") << ": "
         << (cert.pass ? "equal d-energy, pairwise non-cospectral"
                       : "certification failed")
         << "\n";

    json j;
    j["command"] = "equienergetic";
    j["a"] = a;
    j["h1"] = h1_spec;
    j["h2"] = h2_spec;
    j["members"] = members;
    j["energy_spread"] = cert.energy_spread;
    j["energy_tolerance"] = cert.energy_tol;
    j["cospectral_tolerance"] = cert.cospectral_tol;
    j["witnesses"] = witnesses;
    j["cospectral_pairs"] = cert.cospectral_pairs;
    j["pass"] = cert.pass;

    emit(text.str(), j, as_json, out_path);
    return cert.pass ? kExitOk : kExitVerifyFail;
}

int cmd_verify_all(int mutation, bool as_json, const std::string& out_path) {
    cvejoin::VerifyOptions opts;
    opts.mutation = mutation;
    auto report = cvejoin::run_verification_suite(opts);

    std::ostringstream text;
    json checks = json::array();
    int failed = 0;
    for (const auto& c : report.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-55s deviation %-13s tol %-10s %s\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), fmt(c.deviation).c_str(),
                      fmt(c.tolerance).c_str(), c.detail.c_str());
        text << line;
        failed += c.pass ? 0 : 1;
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"deviation", c.deviation},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
    }
    text << (report.all_pass ? "VERIFY-ALL PASS" : "VERIFY-ALL FAIL") << " ("
         << report.checks.size() - failed << "/" << report.checks.size() << " checks)\n";

    json j;
    j["command"] = "verify-all";
    j["mutation"] = mutation;
    j["checks"] = checks;
    j["pass"] = report.all_pass;

    emit(text.str(), j, as_json, out_path);
    return report.all_pass ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central vertex-edge join of three graphs: construction, distance spectra, "
                 "energy, topological indices, and verification"};
    app.require_subcommand(1);

    std::string out_path;
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_option("--out", out_path, "write the report (or constructed graph) to a file");

    // let --json/--out appear after the subcommand name too
    auto add_sub = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    std::vector<std::string> c_inputs;
    auto* construct = add_sub("construct", "build the join of three graphs");
    construct->add_option("graphs", c_inputs, "g1 g2 g3 (paths or builtin:<name>)")
        ->expected(3)
        ->required();

    std::vector<std::string> s_inputs;
    bool closed_form = false;
    double s_tol = 1e-8;
    auto* spectrum = add_sub("spectrum", "distance spectrum and energy");
    spectrum->add_option("graphs", s_inputs, "one graph, or a triple g1 g2 g3 to join")
        ->expected(1, 3)
        ->required();
    spectrum->add_flag("--closed-form", closed_form,
                       "also assemble the spectrum from the operands and compare");
    spectrum->add_option("--tol", s_tol, "comparison tolerance")->capture_default_str();

    std::vector<std::string> i_inputs;
    auto* indices = add_sub("indices", "topological indices, both routes");
    indices->add_option("graphs", i_inputs, "g1 g2 g3")->expected(3)->required();

    std::string h1_spec, h2_spec;
    int a = 0;
    double e_tol = 1e-8;
    auto* equi = add_sub("equienergetic", "certify a d-equienergetic family");
    equi->add_option("h1", h1_spec, "vertex-side base graph")->required();
    equi->add_option("h2", h2_spec, "edge-side base graph")->required();
    equi->add_option("a", a, "total cycle-union order (>= 3)")->required();
    equi->add_option("--tol", e_tol, "energy spread tolerance per vertex")->capture_default_str();

    int mutation = 0;
    auto* verify = add_sub("verify-all", "run the built-in verification suite");
    verify
        ->add_option("--mutate", mutation,
                     "negative control: perturb closed-form coefficient 1..11 by +1")
        ->check(CLI::Range(0, cvejoin::mutation_count()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(c_inputs, out_path);
        if (*spectrum) {
            if (s_inputs.size() == 2)
                throw cvejoin::Error(cvejoin::errc::precondition_violated,
                                     "expected one graph or three, got two");
            return cmd_spectrum(s_inputs, closed_form, s_tol, as_json, out_path);
        }
        if (*indices) return cmd_indices(i_inputs, as_json, out_path);
        if (*equi) return cmd_equienergetic(h1_spec, h2_spec, a, e_tol, as_json, out_path);
        if (*verify) return cmd_verify_all(mutation, as_json, out_path);
    } catch (const cvejoin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
