// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Usage: acceptance <path-to-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cvejoin/cve_join.hpp"
#include "cvejoin/spectral.hpp"
#include "cvejoin/topo_indices.hpp"
#include "cvejoin/verify.hpp"

namespace {

int failures = 0;

void criterion(int number, bool pass, const std::string& summary) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", number, summary.c_str());
    if (!pass) ++failures;
}

struct Group {
    int count = 0;
    int passed = 0;
    double worst_deviation = 0.0;
};

Group collect(const cvejoin::VerifyReport& report, const std::string& prefix) {
    Group g;
    for (const auto& c : report.checks) {
        if (c.name.rfind(prefix, 0) != 0) continue;
        ++g.count;
        g.passed += c.pass ? 1 : 0;
        g.worst_deviation = std::max(g.worst_deviation, c.deviation);
    }
    return g;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

int run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 1;
    }
    const std::string cli = argv[1];

    cvejoin::VerifyOptions opts; // pinned: 200 random trials, eigensolver dim 500
    auto report = cvejoin::run_verification_suite(opts);

    // 1. closed-form distance spectrum vs numeric, four triples, 1e-8
    auto c1 = collect(report, "d-spectrum closed form");
    criterion(1, c1.count == 4 && c1.passed == 4,
              "closed-form d-spectrum equals numeric spectrum for " + std::to_string(c1.count) +
                  " triples (max deviation " + fmt(c1.worst_deviation) + ", tol 1e-8)");

    // 2. -2 multiplicity at least m1 - n1 for the two surplus instances, grouping 1e-6
    auto c2 = collect(report, "-2 multiplicity");
    criterion(2, c2.count == 2 && c2.passed == 2,
              "-2 appears with grouped multiplicity >= m1-n1 (3 and 5) in both instances");

    // 3. line-graph spectrum oracle within 1e-9 on C4, K4, K3,3, Petersen
    auto c3 = collect(report, "line graph spectrum oracle");
    criterion(3, c3.count == 4 && c3.passed == 4,
              "line-graph spectrum oracle matches numeric spectra (max deviation " +
                  fmt(c3.worst_deviation) + ", tol 1e-9)");

    // 4. equienergetic families a=3..12: spread <= 1e-8*order, pairwise
    //    non-cospectral at 1e-6, variable-part identity within 1e-9
    auto c4a = collect(report, "equienergetic family a=");
    auto c4b = collect(report, "variable-part energy identity");
    criterion(4,
              c4a.count == 10 && c4a.passed == 10 && c4b.count == 10 && c4b.passed == 10,
              "equienergetic families a=3..12 certified (worst spread " + fmt(c4a.worst_deviation) +
                  "; variable-part deviation " + fmt(c4b.worst_deviation) + ")");

    // 5. index closed forms: exact rationals, 1e-9 reals, plus the frozen
    //    anchor values of the 12-vertex instance
    auto c5 = collect(report, "index closed forms");
    bool anchors = false;
    {
        auto join = cvejoin::cve_join(cvejoin::cycle(4), cvejoin::complete(2), cvejoin::complete(2));
        auto def = cvejoin::indices_definitional(join.graph);
        anchors = def.wiener == cvejoin::Rational(108) && def.tau == cvejoin::Rational(28) &&
                  def.aveg == cvejoin::Rational(7, 3);
    }
    criterion(5, c5.count == 5 && c5.passed == 5 && anchors,
              "index closed forms match definitional values on 5 triples; "
              "anchor instance has W=108, tau=28, aveg=7/3");

    // 6. structural identities over >= 200 randomized joins
    auto c6 = collect(report, "structural identities");
    criterion(6, c6.count == 1 && c6.passed == 1 && opts.random_trials >= 200,
              "order/size/degree/eccentricity formulas match construction on " +
                  std::to_string(opts.random_trials) + " random joins, zero failures");

    // 7. eigensolver accuracy on known spectra up to dim 500
    auto c7 = collect(report, "eigensolver accuracy");
    criterion(7, c7.count == 1 && c7.passed == 1,
              "eigensolver error " + fmt(c7.worst_deviation) +
                  " <= 1e-10 * max(1, spectral radius) up to dim 500");

    // 8. the CLI suite: exit 0 in under 60 s, and every single-coefficient
    //    mutation is caught with a nonzero exit
    auto t0 = std::chrono::steady_clock::now();
    int clean = run_cli(cli, "verify-all");
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool mutations_caught = true;
    int first_uncaught = 0;
    for (int k = 1; k <= cvejoin::mutation_count(); ++k) {
        if (run_cli(cli, "verify-all --mutate " + std::to_string(k)) == 0) {
            mutations_caught = false;
            if (!first_uncaught) first_uncaught = k;
        }
    }
    std::string summary = "verify-all exits 0 in " + fmt(elapsed) + " s (< 60 s); all " +
                          std::to_string(cvejoin::mutation_count()) +
                          " coefficient mutations exit nonzero";
    if (!mutations_caught)
        summary += " [mutation " + std::to_string(first_uncaught) + " NOT caught]";
    criterion(8, clean == 0 && elapsed < 60.0 && mutations_caught, summary);

    std::printf("ACCEPTANCE: %d/8 criteria pass\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
